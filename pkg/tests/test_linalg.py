"""Canonical subspaces and exact linear algebra."""

import itertools

from leibalg import GF, QQ, Subspace
from leibalg.linalg import matrix_rank, nullspace, rref, solve


def span(field, *vectors):
    return Subspace.span(field, len(vectors[0]), vectors)


class TestEchelon:
    def test_rref_canonical(self):
        field = GF(5)
        rows, pivots = rref([[field(2), field(4)], [field(1), field(2)]], field, 2)
        assert pivots == [0]
        assert rows == [(field(1), field(2))]

    def test_rref_identity_block(self):
        field = QQ
        rows, pivots = rref(
            [[field(1), field(2), field(3)], [field(0), field(1), field(4)]], field, 3
        )
        assert pivots == [0, 1]
        assert rows[0][1] == field(0)  # zeros above pivots

    def test_nullspace_orthogonal(self):
        field = GF(7)
        rows = [[field(1), field(2), field(3)]]
        for v in nullspace(rows, field, 3):
            assert sum((a * b for a, b in zip(rows[0], v)), field.zero()) == field.zero()

    def test_solve_consistency(self):
        field = GF(5)
        rows = [[field(1), field(2)], [field(3), field(4)]]
        rhs = [field(1), field(2)]
        x = solve(rows, rhs, field, 2)
        assert x is not None
        for row, b in zip(rows, rhs):
            assert sum((a * c for a, c in zip(row, x)), field.zero()) == b

    def test_solve_inconsistent(self):
        field = GF(5)
        rows = [[field(1), field(1)], [field(2), field(2)]]
        assert solve(rows, [field(0), field(1)], field, 2) is None


class TestSubspace:
    def test_equality_by_canonical_basis(self):
        field = GF(3)
        a = span(field, [1, 1, 0], [0, 0, 1])
        b = span(field, [1, 1, 1], [0, 0, 2])
        assert a == b
        assert hash(a) == hash(b)

    def test_containment_and_reduce(self):
        field = GF(5)
        s = span(field, [1, 2, 0])
        assert s.contains([2, 4, 0])
        assert not s.contains([1, 0, 0])
        reduced = s.reduce([field(1), field(0), field(3)])
        assert reduced[0] == field(0)

    def test_sum_and_intersection(self):
        field = GF(3)
        a = span(field, [1, 0, 0], [0, 1, 0])
        b = span(field, [0, 1, 0], [0, 0, 1])
        assert a.sum_with(b).dim == 3
        meet = a.intersect(b)
        assert meet.dim == 1
        assert meet.contains([0, 1, 0])

    def test_intersection_exhaustive_oracle(self):
        # compare against direct membership over all vectors of GF(2)^4
        field = GF(2)
        a = Subspace.span(field, 4, [[1, 1, 0, 0], [0, 0, 1, 1]])
        b = Subspace.span(field, 4, [[1, 1, 1, 1], [1, 0, 1, 0]])
        meet = a.intersect(b)
        for combo in itertools.product(range(2), repeat=4):
            v = [field(c) for c in combo]
            assert meet.contains(v) == (a.contains(v) and b.contains(v))

    def test_coords_roundtrip(self):
        field = GF(7)
        s = span(field, [1, 2, 3], [0, 1, 5])
        v = s.linear_combination([field(2), field(3)])
        assert s.coords_of(v) == (field(2), field(3))
        assert s.coords_of([field(0), field(0), field(1)]) is None

    def test_complement_coords(self):
        field = GF(3)
        s = span(field, [1, 0, 2], [0, 1, 1])
        assert s.pivots == (0, 1)
        assert s.complement_coords() == (2,)

    def test_annihilator_dims(self):
        field = GF(5)
        s = span(field, [1, 2, 3, 4])
        ann = s.annihilator()
        assert ann.dim == 3
        assert ann.annihilator() == s

    def test_rank(self):
        field = QQ
        rows = [[field(1), field(2)], [field(2), field(4)]]
        assert matrix_rank(rows, field, 2) == 1
