"""Text formats: structure-constant files, parametric tables, relations.

The v1 algebra format is consumed and produced bit-exactly::

    leibalg v1
    field GF(3)          # or: field Q
    dim 4
    basis x1 x2 x3 x4    # optional
    [1,1] = 1*3          # [e1,e1] = 1*e3; terms "coeff*index" joined by '+'
    [2,1] = 1*3 + 1*4

Omitted products are zero and ``#`` starts a comment.  The parametric
format allows parameter names as coefficient factors (``[3,3] = gamma*6``)
and an optional ``params`` line fixing the variable order.  A relations
file holds one polynomial per line in the same scalar/monomial syntax.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .constraints import ParametricAlgebra
from .core import LeibnizAlgebra
from .errors import LeibalgError, ParseError
from .fields import Field
from .poly import MultiPoly

_HEADER = "leibalg v1"

_PRODUCT_RE = re.compile(r"\[(\d+)\s*,\s*(\d+)\]\s*=\s*(.+)")
_NUMBER_RE = re.compile(r"-?\d+(?:/\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _check_header(lines):
    if not lines or lines[0][1] != _HEADER:
        lineno = lines[0][0] if lines else 1
        raise ParseError(f"expected header {_HEADER!r}", lineno)
    return lines[1:]


def parse_algebra(text: str) -> LeibnizAlgebra:
    """Parse the v1 structure-constant format."""
    lines = _check_header(list(_logical_lines(text)))
    field: Field | None = None
    dim: int | None = None
    labels: list[str] | None = None
    entries: list[tuple[int, int, dict]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        if line.startswith("field"):
            try:
                field = Field.parse(line[len("field") :])
            except LeibalgError as exc:
                raise ParseError(str(exc), lineno) from None
        elif line.startswith("dim"):
            try:
                dim = int(line[len("dim") :].strip())
            except ValueError:
                raise ParseError(f"bad dimension {line!r}", lineno) from None
        elif line.startswith("basis"):
            labels = line.split()[1:]
        else:
            m = _PRODUCT_RE.fullmatch(line)
            if not m:
                raise ParseError(f"unrecognized line {line!r}", lineno)
            if field is None or dim is None:
                raise ParseError("field and dim must precede product lines", lineno)
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(f"product index [{i},{j}] outside 1..{dim}", lineno)
            if (i, j) in seen:
                raise ParseError(f"product [{i},{j}] specified twice", lineno)
            seen.add((i, j))
            vec: dict[int, object] = {}
            for coeff_text, k in _split_terms(m.group(3), lineno):
                if not 1 <= k <= dim:
                    raise ParseError(f"basis index {k} outside 1..{dim}", lineno)
                try:
                    coeff = field(coeff_text)
                except LeibalgError as exc:
                    raise ParseError(str(exc), lineno) from None
                vec[k] = vec.get(k, field.zero()) + coeff
            entries.append((i, j, vec))
    if field is None:
        raise ParseError("missing field line")
    if dim is None:
        raise ParseError("missing dim line")
    if labels is not None and len(labels) != dim:
        raise ParseError(f"basis line names {len(labels)} vectors, dim is {dim}")
    return LeibnizAlgebra.from_table(dim, field, entries, labels)


def _split_terms(rhs: str, lineno: int):
    rhs = rhs.strip()
    if rhs == "0":
        return
    for chunk in rhs.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty term", lineno)
        if "*" in chunk:
            coeff_text, _, index_text = chunk.rpartition("*")
        else:
            coeff_text, index_text = "1", chunk
        try:
            k = int(index_text.strip())
        except ValueError:
            raise ParseError(f"bad basis index {index_text!r}", lineno) from None
        yield coeff_text.strip(), k


def format_algebra(algebra: LeibnizAlgebra) -> str:
    """Canonical v1 text; parse(format(A)) == A and the text round-trips."""
    out = [
        _HEADER,
        f"field {algebra.field}",
        f"dim {algebra.dim}",
        "basis " + " ".join(algebra.labels),
    ]
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            cell = algebra.table[i][j]
            terms = [f"{cell[k]}*{k + 1}" for k in range(n) if cell[k]]
            if terms:
                out.append(f"[{i + 1},{j + 1}] = " + " + ".join(terms))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# polynomials and parametric tables
# ---------------------------------------------------------------------------

def _tokenize_poly(text: str, lineno: int | None = None):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-*":
            tokens.append(ch)
            pos += 1
            continue
        m = re.match(r"\d+(?:/\d+)?", text[pos:])
        if m:
            tokens.append(Fraction(m.group(0)))
            pos += len(m.group(0))
            continue
        m = _IDENT_RE.match(text, pos)
        if m:
            tokens.append(m.group(0))
            pos = m.end()
            continue
        raise ParseError(f"bad character {ch!r} in polynomial {text!r}", lineno)
    return tokens


def parse_poly(text: str, variables) -> MultiPoly:
    """Parse sums of '*'-joined factors (rationals and variable names)."""
    variables = tuple(variables)
    tokens = _tokenize_poly(text)
    if not tokens:
        raise ParseError(f"empty polynomial {text!r}")
    result = MultiPoly.zero(variables)
    sign = Fraction(1)
    factors: list = []
    expect_factor = True

    def flush():
        nonlocal result, factors, sign
        if not factors:
            raise ParseError(f"dangling operator in {text!r}")
        term = MultiPoly.constant(variables, sign)
        for f in factors:
            if isinstance(f, Fraction):
                term = term * f
            else:
                if f not in variables:
                    raise ParseError(f"unknown variable {f!r} in {text!r}")
                term = term * MultiPoly.variable(variables, f)
        result = result + term
        factors = []
        sign = Fraction(1)

    for tok in tokens:
        if tok == "+" or tok == "-":
            if expect_factor:
                # unary sign
                if tok == "-":
                    sign = -sign
                continue
            flush()
            sign = Fraction(-1) if tok == "-" else Fraction(1)
            expect_factor = True
        elif tok == "*":
            if expect_factor:
                raise ParseError(f"misplaced '*' in {text!r}")
            expect_factor = True
        else:
            if not expect_factor:
                raise ParseError(f"missing operator in {text!r}")
            factors.append(tok)
            expect_factor = False
    flush()
    return result


def parse_relations(text: str, variables=None) -> list[MultiPoly]:
    """One polynomial per line; variables inferred in order of appearance."""
    lines = list(_logical_lines(text))
    if variables is None:
        ordered: list[str] = []
        for _, line in lines:
            for name in _IDENT_RE.findall(line):
                if name not in ordered:
                    ordered.append(name)
        variables = tuple(ordered)
    out = []
    for lineno, line in lines:
        try:
            out.append(parse_poly(line, variables))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return out


def parse_parametric(text: str) -> ParametricAlgebra:
    """Parse the parametric extension of the v1 format."""
    lines = _check_header(list(_logical_lines(text)))
    dim: int | None = None
    declared: list[str] | None = None
    raw_cells: list[tuple[int, int, int, str, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        if line.startswith("field"):
            continue  # parametric coefficients are field-independent rationals
        if line.startswith("params"):
            declared = line.split()[1:]
        elif line.startswith("dim"):
            try:
                dim = int(line[len("dim") :].strip())
            except ValueError:
                raise ParseError(f"bad dimension {line!r}", lineno) from None
        elif line.startswith("basis"):
            continue
        else:
            m = _PRODUCT_RE.fullmatch(line)
            if not m:
                raise ParseError(f"unrecognized line {line!r}", lineno)
            if dim is None:
                raise ParseError("dim must precede product lines", lineno)
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(f"product index [{i},{j}] outside 1..{dim}", lineno)
            if (i, j) in seen:
                raise ParseError(f"product [{i},{j}] specified twice", lineno)
            seen.add((i, j))
            rhs = m.group(3).strip()
            if rhs == "0":
                continue
            for chunk in rhs.split("+"):
                chunk = chunk.strip()
                coeff_text, _, index_text = chunk.rpartition("*")
                if not coeff_text:
                    coeff_text, index_text = "1", chunk
                try:
                    k = int(index_text.strip())
                except ValueError:
                    raise ParseError(f"bad basis index {index_text!r}", lineno) from None
                if not 1 <= k <= dim:
                    raise ParseError(f"basis index {k} outside 1..{dim}", lineno)
                raw_cells.append((i, j, k, coeff_text.strip(), lineno))
    if dim is None:
        raise ParseError("missing dim line")
    if declared is None:
        ordered: list[str] = []
        for _, _, _, coeff_text, _ in raw_cells:
            for name in _IDENT_RE.findall(coeff_text):
                if name not in ordered:
                    ordered.append(name)
        declared = ordered
    variables = tuple(declared)
    cells: dict[tuple[int, int], dict[int, MultiPoly]] = {}
    for i, j, k, coeff_text, lineno in raw_cells:
        try:
            poly = parse_poly(coeff_text, variables)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        vec = cells.setdefault((i, j), {})
        vec[k] = vec.get(k, MultiPoly.zero(variables)) + poly
    return ParametricAlgebra.from_table(dim, variables, cells)


def _monomial_strings(poly: MultiPoly) -> list[str]:
    pieces = []
    items = sorted(poly.terms.items(), key=lambda t: MultiPoly._grlex_key(t[0]), reverse=True)
    for exp, coeff in items:
        factors = []
        for idx, e in enumerate(exp):
            factors.extend([poly.variables[idx]] * e)
        if not factors:
            pieces.append(str(coeff))
        elif coeff == 1:
            pieces.append("*".join(factors))
        else:
            pieces.append(str(coeff) + "*" + "*".join(factors))
    return pieces


def format_parametric(p: ParametricAlgebra) -> str:
    out = [_HEADER, "params " + " ".join(p.variables), f"dim {p.dim}"]
    for i in range(p.dim):
        for j in range(p.dim):
            terms = []
            for k in range(p.dim):
                poly = p.entries[i][j][k]
                if poly.is_zero():
                    continue
                for mono in _monomial_strings(poly):
                    terms.append(f"{mono}*{k + 1}")
            if terms:
                out.append(f"[{i + 1},{j + 1}] = " + " + ".join(terms))
    return "\n".join(out) + "\n"
