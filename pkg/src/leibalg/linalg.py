"""Exact linear algebra over a Field: echelon forms, kernels, subspaces.

Vectors are tuples of FieldElement; matrices are lists/tuples of such rows.
The central object is Subspace: a linear subspace stored as its unique
reduced row echelon basis, so two subspaces are equal iff their stored
matrices are equal.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import BadVector, FieldMismatch
from .fields import Field, FieldElement

Vector = tuple[FieldElement, ...]


def zero_vector(field: Field, n: int) -> Vector:
    z = field.zero()
    return (z,) * n


def basis_vector(field: Field, n: int, i: int) -> Vector:
    """Standard basis vector e_i (0-based)."""
    z, o = field.zero(), field.one()
    return tuple(o if j == i else z for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))

def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: FieldElement, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return not any(x)


def rref(rows: Iterable[Sequence[FieldElement]], field: Field, ncols: int):
    """Reduced row echelon form.

    Returns (rows, pivots): nonzero rows with leading ones, zeros above and
    below each pivot, pivot columns strictly increasing.
    """
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][col].inv()
        work[r] = [inv * a for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                c = work[i][col]
                work[i] = [a - c * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    result = [tuple(work[i]) for i in range(r)]
    return result, pivots


def nullspace(rows: Iterable[Sequence[FieldElement]], field: Field, ncols: int) -> list[Vector]:
    """Canonical basis of {x : M x = 0} for the matrix with the given rows."""
    ech, pivots = rref(rows, field, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    z, o = field.zero(), field.one()
    basis = []
    for fc in free:
        v = [z] * ncols
        v[fc] = o
        for row, pc in zip(ech, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return basis


def solve(rows: Sequence[Sequence[FieldElement]], rhs: Sequence[FieldElement], field: Field, ncols: int) -> Vector | None:
    """A particular solution x of M x = rhs, or None when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, pivots = rref(aug, field, ncols + 1)
    if ncols in pivots:
        return None
    z = field.zero()
    x = [z] * ncols
    for row, pc in zip(ech, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def matrix_rank(rows: Iterable[Sequence[FieldElement]], field: Field, ncols: int) -> int:
    return len(rref(rows, field, ncols)[0])


class Subspace:
    """A subspace of field^ambient_dim in canonical reduced echelon form.

    Equality and hashing use the canonical basis matrix, so Subspace values
    can be compared and deduplicated directly.  Instances are immutable.
    """

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field: Field, ambient_dim: int, rows, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        coerced = []
        for v in vectors:
            v = tuple(field(a) for a in v)
            if len(v) != ambient_dim:
                raise BadVector(f"vector of length {len(v)} in ambient dim {ambient_dim}")
            coerced.append(v)
        rows, pivots = rref(coerced, field, ambient_dim)
        return cls(field, ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        rows = [basis_vector(field, ambient_dim, i) for i in range(ambient_dim)]
        return cls(field, ambient_dim, rows, list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient_dim

    def reduce(self, v: Sequence[FieldElement]) -> Vector:
        """Canonical representative of v modulo this subspace."""
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = w[pc]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[FieldElement]) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def coords_of(self, v: Sequence[FieldElement]) -> Vector | None:
        """Coefficients of v over self.rows, or None when v is outside.

        Echelon rows have unit pivots and zeros in other pivot columns, so
        the coefficient of each row is just v at that row's pivot column.
        """
        if not self.contains(v):
            return None
        return tuple(v[pc] for pc in self.pivots)

    def linear_combination(self, coeffs: Sequence[FieldElement]) -> Vector:
        n = self.ambient_dim
        acc = list(zero_vector(self.field, n))
        for c, row in zip(coeffs, self.rows):
            if c:
                for j in range(n):
                    acc[j] = acc[j] + c * row[j]
        return tuple(acc)

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.rows + other.rows)

    def annihilator(self) -> "Subspace":
        """All x with row . x == 0 for every basis row."""
        basis = nullspace(self.rows, self.field, self.ambient_dim)
        return Subspace.span(self.field, self.ambient_dim, basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        joined = self.annihilator().rows + other.annihilator().rows
        return Subspace.span(
            self.field, self.ambient_dim, nullspace(joined, self.field, self.ambient_dim)
        )

    def complement_coords(self) -> tuple[int, ...]:
        """Coordinates not used as pivots; they index a complement basis."""
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in pivot_set)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise BadVector("subspaces of different ambient dimension")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self):
        rows = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Subspace(dim {self.dim} of {self.field}^{self.ambient_dim}: [{rows}])"
