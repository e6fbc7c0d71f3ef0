"""Seeded random nilpotent algebras for property suites.

Random structure constants almost never satisfy the defining identity, so
algebras are grown instead as towers of one-dimensional central extensions
over small abelian or cyclic bases, mixed with abelian direct summands.
A central extension by a bilinear form phi is a Leibniz algebra exactly
when phi satisfies the (linear) cocycle condition

    phi(a, [b, c]) = phi([a, b], c) + phi(b, [a, c]),

so a random element of that kernel always yields a valid algebra, and a
central extension of a nilpotent algebra stays nilpotent.  Everything is
driven by an explicit random.Random, so suites are reproducible.
"""

from __future__ import annotations

import random

from . import _modp
from .core import LeibnizAlgebra
from .errors import NeedsFiniteField
from .fields import Field
from .linalg import Subspace


def random_nilpotent_algebra(rng: random.Random, field: Field, dim: int) -> LeibnizAlgebra:
    """A random nilpotent Leibniz algebra of exactly the requested dimension."""
    if not field.is_finite():
        raise NeedsFiniteField("random tower generation needs GF(p)")
    if dim == 0:
        return LeibnizAlgebra.from_table(0, field, [])
    if rng.random() < 0.5 or dim == 1:
        algebra = LeibnizAlgebra.from_table(1, field, [])
    else:
        algebra = LeibnizAlgebra.from_table(2, field, [(1, 1, {2: 1})])
    while algebra.dim < dim:
        if rng.random() < 0.25:
            algebra = algebra.direct_sum(LeibnizAlgebra.from_table(1, field, []))
        else:
            algebra = central_extension(algebra, _random_cocycle(rng, algebra))
    return algebra


def _cocycle_space(algebra: LeibnizAlgebra) -> list[list[int]]:
    """Basis of scalar cocycles phi as flat n*n integer vectors."""
    p = algebra.field.modulus
    n = algebra.dim
    table = [
        [[int(c.value) for c in cell] for cell in row] for row in algebra.table
    ]
    rows = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # phi(a, [b,c]) - phi([a,b], c) - phi(b, [a,c]) = 0
                row = [0] * (n * n)
                for m in range(n):
                    if table[b][c][m]:
                        row[a * n + m] = (row[a * n + m] + table[b][c][m]) % p
                    if table[a][b][m]:
                        row[m * n + c] = (row[m * n + c] - table[a][b][m]) % p
                    if table[a][c][m]:
                        row[b * n + m] = (row[b * n + m] - table[a][c][m]) % p
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[0] * (n * n)]
    return _modp.nullspace(rows, p, n * n)


def _random_cocycle(rng: random.Random, algebra: LeibnizAlgebra) -> list[list[int]]:
    p = algebra.field.modulus
    n = algebra.dim
    basis = _cocycle_space(algebra)
    flat = [0] * (n * n)
    for vec in basis:
        c = rng.randrange(p)
        if c:
            for idx in range(n * n):
                if vec[idx]:
                    flat[idx] = (flat[idx] + c * vec[idx]) % p
    return [[flat[i * n + j] for j in range(n)] for i in range(n)]


def central_extension(algebra: LeibnizAlgebra, phi: list[list[int]]) -> LeibnizAlgebra:
    """Extend by one central dimension with [x, y] += phi(x, y) * e_new."""
    field = algebra.field
    n = algebra.dim
    z = field.zero()
    table = [[[z] * (n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = algebra.table[i][j][k]
            table[i][j][n] = field(phi[i][j])
    return LeibnizAlgebra(field, table)


def random_invertible_matrix(rng: random.Random, field: Field, n: int):
    """Rows of a random invertible matrix over GF(p) (rejection sampling)."""
    if not field.is_finite():
        raise NeedsFiniteField("random matrices need GF(p)")
    p = field.modulus
    while True:
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        if _modp.rank(rows, p, n) == n:
            return [[field(c) for c in row] for row in rows]


def change_of_basis(algebra: LeibnizAlgebra, matrix) -> LeibnizAlgebra:
    """Structure constants in the basis f_i = sum_j matrix[i][j] e_j.

    The result is isomorphic to the input by construction; useful for
    exercising the isomorphism search on scrambled presentations.
    """
    basis = Subspace.span(algebra.field, algebra.dim, matrix)
    if basis.dim != algebra.dim:
        raise ValueError("basis change matrix must be invertible")
    new_rows = [algebra.vector(row) for row in matrix]
    span = Subspace.span(algebra.field, algebra.dim, new_rows)
    table = []
    for u in new_rows:
        row = []
        for v in new_rows:
            w = algebra.bracket(u, v)
            # coordinates of w over new_rows: solve via the echelon span,
            # then translate from echelon rows back to the given rows.
            coords = _coords_over(new_rows, w, algebra)
            row.append(coords)
        table.append(row)
    assert span.dim == algebra.dim
    return LeibnizAlgebra(algebra.field, table)


def _coords_over(rows, target, algebra: LeibnizAlgebra):
    from .linalg import solve

    n = algebra.dim
    columns = [[rows[r][c] for r in range(len(rows))] for c in range(n)]
    coords = solve(columns, list(target), algebra.field, len(rows))
    if coords is None:
        raise ValueError("target outside the span of the rows")
    return list(coords)
