"""Maximal subalgebras, isomorphism testing, and the P1/P2 properties.

For a nilpotent algebra over GF(p) the maximal subalgebras are exactly the
codimension-one subspaces containing the derived subalgebra, i.e. the
pullbacks of the (p^d - 1)/(p - 1) hyperplanes of A/[A,A]; this is
cross-validated against the intersection-of-maximals Frattini computation.

P1 means all maximal subalgebras are pairwise isomorphic; P2 means they all
share the same upper central series dimension profile (P1 implies P2).

Isomorphism search contract: over GF(p), for nilpotent algebras with
dim <= 7 and dim(A/[A,A]) <= 3, the search is complete -- a `no` answer is
an exhaustion proof.  An isomorphism is determined by the images of a
coset basis of A/[A,A]; candidate images are enumerated inside the affine
solution spaces of necessary linear conditions, filtered by per-element
invariants, and extended by bracketing with every induced product checked.
Every filter is a necessary condition, so no isomorphism is missed, and
the first map found in the fixed deterministic order is returned.  The
hot kernels run on plain integer residues for speed.

Enumerations and pairwise checks are pure functions of immutable inputs,
so callers may evaluate distinct maximal subalgebras concurrently; output
lists are always sorted by hyperplane tag.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, fields as dataclass_fields

from . import _modp
from ._modp import SpanTracker
from .core import LeibnizAlgebra
from .errors import (
    FieldMismatch,
    InternalError,
    NeedsFiniteField,
    NotNilpotent,
    SearchBoundExceeded,
)
from .fields import FieldElement
from .linalg import Subspace, matrix_rank
from .series import lower_central_series, nilpotency_data, upper_central_series

_SQUARE_PROFILE_LIMIT = 4096

_SEARCH_DIM_BOUND = 7
_SEARCH_GEN_BOUND = 3


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants; equality is necessary for isomorphism."""

    dim: int
    lower_dims: tuple[int, ...]
    upper_dims: tuple[int, ...]
    leib_dim: int
    center_dim: int
    left_center_dim: int
    derived_dim: int
    square_profile: tuple[int, int] | None  # (# v with v*v = 0, # with v*v != 0)


def fingerprint(algebra: LeibnizAlgebra) -> Fingerprint:
    prof = nilpotency_data(algebra)
    square_profile = None
    if algebra.field.is_finite():
        p = algebra.field.modulus
        if p**algebra.dim <= _SQUARE_PROFILE_LIMIT:
            ia = _IntAlgebra.from_algebra(algebra)
            zero = 0
            for v in itertools.product(range(p), repeat=algebra.dim):
                if not any(ia.bracket(v, v)):
                    zero += 1
            square_profile = (zero, p**algebra.dim - zero)
    return Fingerprint(
        dim=algebra.dim,
        lower_dims=prof.lower_dims,
        upper_dims=prof.upper_dims,
        leib_dim=algebra.leib_ideal().dim,
        center_dim=algebra.center().dim,
        left_center_dim=algebra.left_center().dim,
        derived_dim=algebra.derived().dim,
        square_profile=square_profile,
    )


def _first_fingerprint_diff(a: Fingerprint, b: Fingerprint):
    for f in dataclass_fields(Fingerprint):
        va, vb = getattr(a, f.name), getattr(b, f.name)
        if va != vb:
            return (f.name, va, vb)
    return None


# ---------------------------------------------------------------------------
# maximal subalgebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MaximalSubalgebra:
    """A codimension-one subalgebra containing [A, A].

    ``hyperplane_tag`` is the defining covector on A/[A,A] in projective
    normal form (first nonzero coordinate equal to one), stored as residues.
    ``induced`` is the algebra structure on the echelon basis of the
    subspace.
    """

    subspace: Subspace
    induced: LeibnizAlgebra
    hyperplane_tag: tuple[int, ...]


def enumerate_maximal(algebra: LeibnizAlgebra) -> list[MaximalSubalgebra]:
    """All maximal subalgebras, sorted by hyperplane tag.

    There are exactly (p^d - 1)/(p - 1) of them, d = dim(A/[A,A]): the
    pullbacks of the hyperplanes of A/[A,A].  Each contains the derived
    subalgebra, hence is closed under the bracket.
    """
    if not algebra.field.is_finite():
        raise NeedsFiniteField("maximal subalgebra enumeration needs GF(p)")
    lower = lower_central_series(algebra)
    if not lower[-1].is_zero():
        raise NotNilpotent("maximal enumeration requires a nilpotent algebra")
    derived = lower[1] if len(lower) > 1 else algebra.derived()
    comp = derived.complement_coords()
    d = len(comp)
    if d == 0:
        return []
    p = algebra.field.modulus
    result = []
    for tag in _normalized_covectors(p, d):
        t0 = next(i for i, c in enumerate(tag) if c)
        vectors = list(derived.rows)
        one = algebra.field.one()
        for b in range(d):
            if b == t0:
                continue
            vec = [algebra.field.zero()] * algebra.dim
            vec[comp[b]] = one
            vec[comp[t0]] = algebra.field(-tag[b])
            vectors.append(tuple(vec))
        subspace = Subspace.span(algebra.field, algebra.dim, vectors)
        induced = algebra.restrict(subspace)
        result.append(MaximalSubalgebra(subspace, induced, tag))
    result.sort(key=lambda m: m.hyperplane_tag)
    return result


def _normalized_covectors(p: int, d: int):
    """All covectors of GF(p)^d with first nonzero coordinate equal to 1."""
    for t0 in range(d):
        tail_len = d - t0 - 1
        for tail in itertools.product(range(p), repeat=tail_len):
            yield (0,) * t0 + (1,) + tail


def restrict(algebra: LeibnizAlgebra, subspace: Subspace) -> LeibnizAlgebra:
    """Induced algebra on the echelon basis of a bracket-closed subspace."""
    return algebra.restrict(subspace)


def frattini_by_intersection(algebra: LeibnizAlgebra) -> Subspace:
    """Intersection of all maximal subalgebras (must equal [A, A])."""
    acc = algebra.full_space()
    for m in enumerate_maximal(algebra):
        acc = acc.intersect(m.subspace)
    return acc


# ---------------------------------------------------------------------------
# isomorphism verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of an isomorphism test.

    ``yes`` carries the matrix whose row i is the image of the i-th basis
    vector of the source; ``no`` carries either the differing invariant or
    an exhaustion statement; ``unknown`` only occurs over Q with equal
    fingerprints.
    """

    status: str  # "yes" | "no" | "unknown"
    matrix: tuple[tuple[FieldElement, ...], ...] | None = None
    reason: str = ""
    invariant: tuple | None = None

    def __bool__(self):
        return self.status == "yes"


@dataclass(frozen=True)
class MaximalPairWitness:
    """A pair of maximal subalgebras witnessing a property failure."""

    a: MaximalSubalgebra
    b: MaximalSubalgebra
    detail: str


def is_isomorphic(a: LeibnizAlgebra, b: LeibnizAlgebra) -> IsoVerdict:
    """Decide isomorphism; complete over GF(p) within the search bounds."""
    if a.field != b.field:
        raise FieldMismatch("isomorphism test needs a common field")
    if a.dim != b.dim:
        return IsoVerdict("no", reason="dimensions differ", invariant=("dim", a.dim, b.dim))
    if a.table == b.table:
        identity = tuple(a.basis_vector(i) for i in range(a.dim))
        return IsoVerdict("yes", matrix=identity, reason="identical structure constants")
    fa, fb = fingerprint(a), fingerprint(b)
    diff = _first_fingerprint_diff(fa, fb)
    if diff is not None:
        return IsoVerdict(
            "no",
            reason=f"invariant {diff[0]} differs: {diff[1]} vs {diff[2]}",
            invariant=diff,
        )
    if not a.field.is_finite():
        return IsoVerdict("unknown", reason="equal fingerprints; no search over Q")
    if not (fa.lower_dims[-1] == 0 and fb.lower_dims[-1] == 0):
        raise SearchBoundExceeded("generator search covers nilpotent algebras only")
    gen_count = a.dim - fa.derived_dim
    if a.dim > _SEARCH_DIM_BOUND or gen_count > _SEARCH_GEN_BOUND:
        raise SearchBoundExceeded(
            f"search bounds are dim <= {_SEARCH_DIM_BOUND} and "
            f"dim(A/[A,A]) <= {_SEARCH_GEN_BOUND}; got dim={a.dim}, "
            f"generators={gen_count}"
        )
    raw = _search_isomorphism(a, b)
    if raw is None:
        return IsoVerdict("no", reason="exhaustive generator-image search found no map")
    matrix = tuple(tuple(a.field(c) for c in row) for row in raw)
    _assert_isomorphism(a, b, matrix)
    return IsoVerdict("yes", matrix=matrix, reason="explicit isomorphism found")


def _assert_isomorphism(a: LeibnizAlgebra, b: LeibnizAlgebra, matrix) -> None:
    """Full bilinear check of a claimed isomorphism matrix; bug if it fails."""
    if matrix_rank(matrix, a.field, a.dim) != a.dim:
        raise InternalError("claimed isomorphism matrix is singular")
    n = a.dim
    for i in range(n):
        for j in range(n):
            lhs = _apply_matrix(matrix, a.table[i][j], b)
            rhs = b.bracket(matrix[i], matrix[j])
            if lhs != rhs:
                raise InternalError("claimed isomorphism fails the bracket check")


def _apply_matrix(matrix, v, target: LeibnizAlgebra):
    acc = list(target.zero_vector())
    for c, row in zip(v, matrix):
        if c:
            for k in range(target.dim):
                acc[k] = acc[k] + c * row[k]
    return tuple(acc)


def check_p1(
    algebra: LeibnizAlgebra, spot_seed: int = 0
) -> tuple[bool, MaximalPairWitness | None]:
    """All maximal subalgebras pairwise isomorphic?

    Compares every maximal subalgebra against the first (tag order), then
    spot-verifies transitivity on one seeded random pair.
    """
    maximals = enumerate_maximal(algebra)
    if len(maximals) <= 1:
        return True, None
    first = maximals[0]
    for m in maximals[1:]:
        verdict = is_isomorphic(m.induced, first.induced)
        if verdict.status != "yes":
            return False, MaximalPairWitness(first, m, verdict.reason)
    if len(maximals) >= 3:
        rng = random.Random(spot_seed)
        i, j = rng.sample(range(1, len(maximals)), 2)
        verdict = is_isomorphic(maximals[i].induced, maximals[j].induced)
        if verdict.status != "yes":
            raise InternalError(
                "transitivity spot check failed although all maximal "
                "subalgebras matched the first"
            )
    return True, None


def check_p2(algebra: LeibnizAlgebra) -> tuple[bool, MaximalPairWitness | None]:
    """Do all maximal subalgebras share one upper-series dimension profile?"""
    maximals = enumerate_maximal(algebra)
    if len(maximals) <= 1:
        return True, None
    profiles = [tuple(s.dim for s in upper_central_series(m.induced)) for m in maximals]
    first = profiles[0]
    for m, prof in zip(maximals[1:], profiles[1:]):
        if prof != first:
            detail = f"upper series dims {first} vs {prof}"
            return False, MaximalPairWitness(maximals[0], m, detail)
    return True, None


# ---------------------------------------------------------------------------
# generator-image search (integer kernel)
# ---------------------------------------------------------------------------

class _IntAlgebra:
    """Structure constants as sparse integer residues mod p."""

    __slots__ = ("p", "n", "cell")

    def __init__(self, p: int, n: int, cell):
        self.p = p
        self.n = n
        self.cell = cell  # cell[i][j] = tuple of (k, coeff) pairs

    @classmethod
    def from_algebra(cls, algebra: LeibnizAlgebra) -> "_IntAlgebra":
        p = algebra.field.modulus
        n = algebra.dim
        cell = tuple(
            tuple(
                tuple(
                    (k, int(algebra.table[i][j][k].value))
                    for k in range(n)
                    if algebra.table[i][j][k]
                )
                for j in range(n)
            )
            for i in range(n)
        )
        return cls(p, n, cell)

    def bracket(self, u, v):
        p = self.p
        acc = [0] * self.n
        cell = self.cell
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = cell[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                for k, coeff in row[j]:
                    acc[k] = (acc[k] + c * coeff) % p
        return acc


def _subspace_to_int(s: Subspace):
    return [[int(c.value) for c in row] for row in s.rows], list(s.pivots)


class _Closure:
    """Bracket closure of a generator prefix, with a replayable recipe.

    ``steps`` processes every ordered pair of closure elements exactly once,
    in a fixed order; ``("new", i, j, None)`` appends the product as a new
    element and ``("dep", i, j, coeffs)`` records its sparse expression over
    the elements inserted so far.
    """

    __slots__ = ("elems", "steps", "gen_count")

    def __init__(self, alg: _IntAlgebra, gen_vecs):
        elems = [list(g) for g in gen_vecs]
        tracker = SpanTracker(alg.p, alg.n)
        for g in elems:
            if not tracker.add(g):
                raise InternalError("generators must be independent")
        steps = []
        t = 0
        while t < len(elems):
            pair_list = [(i, t) for i in range(t + 1)] + [(t, j) for j in range(t)]
            for i, j in pair_list:
                w = alg.bracket(elems[i], elems[j])
                coeffs = tracker.express(w)
                if coeffs is None:
                    tracker.add(w)
                    elems.append(w)
                    steps.append(("new", i, j, None))
                else:
                    sparse = tuple((idx, c) for idx, c in enumerate(coeffs) if c)
                    steps.append(("dep", i, j, sparse))
            t += 1
        self.elems = elems
        self.steps = steps
        self.gen_count = len(gen_vecs)

    def replay(self, alg: _IntAlgebra, gen_images):
        """Images of all closure elements, or None when any check fails."""
        p = alg.p
        n = alg.n
        imgs = [list(g) for g in gen_images]
        tracker = SpanTracker(p, n)
        for g in imgs:
            if not tracker.add(g):
                return None
        for kind, i, j, data in self.steps:
            w = alg.bracket(imgs[i], imgs[j])
            if kind == "new":
                if not tracker.add(w):
                    return None
                imgs.append(w)
            else:
                expected = [0] * n
                for idx, c in data:
                    img = imgs[idx]
                    for k in range(n):
                        if img[k]:
                            expected[k] = (expected[k] + c * img[k]) % p
                if w != expected:
                    return None
        return imgs


class _SearchSide:
    """Per-algebra search data: derived cosets, series membership, invariants."""

    __slots__ = ("alg", "derived_ech", "derived_pivots", "coset_coords", "member_spaces")

    def __init__(self, algebra: LeibnizAlgebra):
        self.alg = _IntAlgebra.from_algebra(algebra)
        lower = lower_central_series(algebra)
        upper = upper_central_series(algebra)
        derived = lower[1] if len(lower) > 1 else algebra.derived()
        self.derived_ech, self.derived_pivots = _subspace_to_int(derived)
        pivot_set = set(self.derived_pivots)
        self.coset_coords = [c for c in range(algebra.dim) if c not in pivot_set]
        self.member_spaces = [_subspace_to_int(s) for s in lower[1:] + upper[1:]]

    def coset(self, v):
        reduced = _modp.reduce_mod(v, self.derived_ech, self.derived_pivots, self.alg.p)
        return [reduced[c] for c in self.coset_coords]

    def membership_profile(self, v):
        return tuple(
            _modp.contains(v, ech, piv, self.alg.p) for ech, piv in self.member_spaces
        )

    def square_is_zero(self, v) -> bool:
        return not any(self.alg.bracket(v, v))

    def mult_data(self, v):
        """(rank L_v, rank R_v, nilindex L_v, nilindex R_v)."""
        alg = self.alg
        n = alg.n
        basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        lrows = [alg.bracket(v, e) for e in basis]
        rrows = [alg.bracket(e, v) for e in basis]
        return (
            _modp.rank(lrows, alg.p, n),
            _modp.rank(rrows, alg.p, n),
            _nilindex(lrows, alg.p, n),
            _nilindex(rrows, alg.p, n),
        )


def _nilindex(op_rows, p: int, n: int) -> int:
    """Smallest m <= n+1 with op^m = 0; op given by rows = images of basis."""
    current = [row[:] for row in op_rows]
    for m in range(1, n + 2):
        if not any(any(r) for r in current):
            return m
        nxt = []
        for row in current:
            acc = [0] * n
            for i, c in enumerate(row):
                if c:
                    src = op_rows[i]
                    for k in range(n):
                        if src[k]:
                            acc[k] = (acc[k] + c * src[k]) % p
            nxt.append(acc)
        current = nxt
    return n + 2


def _search_isomorphism(a: LeibnizAlgebra, b: LeibnizAlgebra):
    """Complete generator-image search; a matrix (rows = basis images) or None."""
    side_a = _SearchSide(a)
    side_b = _SearchSide(b)
    p = side_a.alg.p
    n = side_a.alg.n
    gens = side_a.coset_coords
    d = len(gens)
    if d == 0:
        return None  # dim-0 algebras are caught by the identical-table fast path
    gen_vecs = [[1 if i == g else 0 for i in range(n)] for g in gens]
    closures = [_Closure(side_a.alg, gen_vecs[: k + 1]) for k in range(d)]

    gen_sigs = []
    for g in gen_vecs:
        gen_sigs.append(
            (
                side_a.square_is_zero(g),
                side_a.membership_profile(g),
                side_a.mult_data(g),
            )
        )

    relations: list = [None] * d
    for k in range(1, d):
        relations[k] = _gen_relations(side_a.alg, closures[k - 1].elems, gen_vecs[k])

    def candidate_ok(v, sig) -> bool:
        if side_b.square_is_zero(v) != sig[0]:
            return False
        if side_b.membership_profile(v) != sig[1]:
            return False
        return side_b.mult_data(v) == sig[2]

    def cosets_independent(gen_imgs, v) -> bool:
        rows = [side_b.coset(g) for g in gen_imgs] + [side_b.coset(v)]
        return _modp.rank(rows, p, d) == len(rows)

    def descend(k, gen_imgs, prev_elem_imgs):
        sig = gen_sigs[k]
        if k == 0:
            candidates = _all_vectors_outside_derived(side_b, n, p)
        else:
            candidates = _constrained_candidates(side_b, relations[k], prev_elem_imgs, n, p)
        for v in candidates:
            if not candidate_ok(v, sig):
                continue
            if not cosets_independent(gen_imgs, v):
                continue
            elem_imgs = closures[k].replay(side_b.alg, gen_imgs + [v])
            if elem_imgs is None:
                continue
            if k == d - 1:
                return _assemble_matrix(closures[k], elem_imgs, p, n)
            result = descend(k + 1, gen_imgs + [v], elem_imgs)
            if result is not None:
                return result
        return None

    return descend(0, [], [])


def _all_vectors_outside_derived(side_b: _SearchSide, n: int, p: int):
    for v in itertools.product(range(p), repeat=n):
        if any(side_b.coset(v)):
            yield list(v)


def _gen_relations(alg: _IntAlgebra, elems, gen_vec):
    """Left-kernel relations among words linear in the next generator.

    Word rows: [g, e_u] then [e_u, g] for each closure element, followed by
    the closure elements themselves.  Every kernel combination is a linear
    identity the generator image must reproduce on the target side.
    """
    rows = []
    for e in elems:
        rows.append(alg.bracket(gen_vec, e))
    for e in elems:
        rows.append(alg.bracket(e, gen_vec))
    for e in elems:
        rows.append(list(e))
    return _modp.left_kernel(rows, alg.p, alg.n)


def _constrained_candidates(side_b: _SearchSide, kernel, elem_imgs, n: int, p: int):
    """Solve the linear necessary conditions and enumerate that affine space."""
    alg = side_b.alg
    m = len(elem_imgs)
    basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # rword[u][i] = [e_i, E_u] (for words [g, e_u] evaluated at v: sum_i v_i rword)
    # lword[u][i] = [E_u, e_i] (for words [e_u, g])
    rword = [[alg.bracket(e, img) for e in basis] for img in elem_imgs]
    lword = [[alg.bracket(img, e) for e in basis] for img in elem_imgs]
    sys_rows, sys_rhs = [], []
    for kappa in kernel:
        acc = [[0] * n for _ in range(n)]  # acc[i][k]: coefficient of v_i in equation k
        for u in range(m):
            cg = kappa[u]
            cl = kappa[m + u]
            if cg:
                wu = rword[u]
                for i in range(n):
                    src = wu[i]
                    row = acc[i]
                    for k in range(n):
                        if src[k]:
                            row[k] = (row[k] + cg * src[k]) % p
            if cl:
                wu = lword[u]
                for i in range(n):
                    src = wu[i]
                    row = acc[i]
                    for k in range(n):
                        if src[k]:
                            row[k] = (row[k] + cl * src[k]) % p
        const = [0] * n
        for u in range(m):
            ce = kappa[2 * m + u]
            if ce:
                img = elem_imgs[u]
                for k in range(n):
                    if img[k]:
                        const[k] = (const[k] + ce * img[k]) % p
        for k in range(n):
            row = [acc[i][k] for i in range(n)]
            rhs = (-const[k]) % p
            if any(row) or rhs:
                sys_rows.append(row)
                sys_rhs.append(rhs)
    if not sys_rows:
        yield from _all_vectors_outside_derived(side_b, n, p)
        return
    solution = _modp.solve_affine(sys_rows, sys_rhs, p, n)
    if solution is None:
        return
    x0, null_basis = solution
    if not null_basis:
        yield list(x0)
        return
    for combo in itertools.product(range(p), repeat=len(null_basis)):
        v = list(x0)
        for c, direction in zip(combo, null_basis):
            if c:
                for i in range(n):
                    if direction[i]:
                        v[i] = (v[i] + c * direction[i]) % p
        yield v


def _assemble_matrix(closure: _Closure, elem_imgs, p: int, n: int):
    """Matrix sending the standard basis of the source to images in the target."""
    inv = _modp.matinv([list(e) for e in closure.elems], p)
    if inv is None:
        raise InternalError("closure elements must form a basis")
    matrix = []
    for row in inv:
        acc = [0] * n
        for c, img in zip(row, elem_imgs):
            if c:
                for k in range(n):
                    if img[k]:
                        acc[k] = (acc[k] + c * img[k]) % p
        matrix.append(acc)
    return matrix
