"""Exact field arithmetic: construction, canonical forms, squares."""

from fractions import Fraction

import pytest

from leibalg import (
    GF,
    QQ,
    ConstructionError,
    DivisionByZero,
    Field,
    FieldMismatch,
    is_square,
    sqrt,
)


class TestConstruction:
    def test_prime_field(self):
        field = GF(5)
        assert field.is_finite()
        assert field.modulus == 5
        assert field.characteristic == 5

    def test_composite_modulus_rejected(self):
        with pytest.raises(ConstructionError):
            GF(4)

    def test_rationals(self):
        assert not QQ.is_finite()
        assert QQ.characteristic == 0

    def test_large_prime_accepted(self):
        GF(101)
        GF(7919)

    def test_parse_literals(self):
        assert Field.parse("Q") == QQ
        assert Field.parse("GF(7)") == GF(7)
        assert str(GF(7)) == "GF(7)"
        assert str(QQ) == "Q"


class TestArithmetic:
    def test_mul_mod7(self):
        field = GF(7)
        assert field(2) * field(4) == field(1)

    def test_inv_zero_rationals(self):
        with pytest.raises(DivisionByZero):
            QQ(0).inv()

    def test_rational_addition(self):
        assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == QQ(Fraction(5, 6))

    def test_field_mismatch_rejected(self):
        with pytest.raises(FieldMismatch):
            GF(5)(1) + GF(7)(1)
        with pytest.raises(FieldMismatch):
            QQ(1) * GF(3)(1)

    def test_int_coercion(self):
        assert GF(5)(3) + 4 == GF(5)(2)
        assert 2 * QQ(Fraction(1, 4)) == QQ(Fraction(1, 2))

    def test_division(self):
        assert GF(7)(3) / GF(7)(5) == GF(7)(2)  # 3 * 5^-1 = 3 * 3 = 9 = 2
        with pytest.raises(DivisionByZero):
            GF(7)(3) / GF(7)(0)

    def test_pow(self):
        assert GF(7)(3) ** 6 == GF(7)(1)
        assert QQ(2) ** -2 == QQ(Fraction(1, 4))

    def test_inverse_law_everywhere(self):
        for p in (2, 3, 5, 11):
            field = GF(p)
            for x in field.elements():
                if x:
                    assert x * x.inv() == field.one()
        for v in (Fraction(3, 7), Fraction(-2, 5), Fraction(12)):
            x = QQ(v)
            assert x * x.inv() == QQ.one()

    def test_canonical_forms(self):
        # residues reduced, fractions in lowest terms with positive denominator
        assert GF(5)(12).value == 2
        assert GF(5)(-1).value == 4
        x = QQ(Fraction(6, -4))
        assert x.value == Fraction(-3, 2)
        assert x.value.denominator == 2
        # renormalizing a stored value changes nothing
        assert QQ(x.value) == x
        assert GF(5)(GF(5)(3).value) == GF(5)(3)

    def test_scalar_literals(self):
        assert QQ("3/4") == QQ(Fraction(3, 4))
        assert QQ("-12") == QQ(-12)
        assert GF(7)("10") == GF(7)(3)
        assert GF(7)("1/2") == GF(7)(4)  # residues may come as fractions


class TestSquares:
    def test_two_mod_three_not_square(self):
        # oracle: enumerate squares mod 3 = {0, 1}
        squares = {(y * y) % 3 for y in range(3)}
        assert squares == {0, 1}
        assert not is_square(GF(3)(2))

    def test_two_mod_seven_square(self):
        assert is_square(GF(7)(2))  # 3*3 = 9 = 2
        assert sqrt(GF(7)(2)) == GF(7)(3)

    def test_rational_square(self):
        assert is_square(QQ(Fraction(4, 9)))
        assert sqrt(QQ(Fraction(4, 9))) == QQ(Fraction(2, 3))
        assert not is_square(QQ(-1))
        assert not is_square(QQ(2))

    def test_sqrt_missing(self):
        assert sqrt(GF(3)(2)) is None

    def test_zero_sqrt(self):
        assert sqrt(GF(11)(0)) == GF(11)(0)
        assert sqrt(QQ(0)) == QQ(0)

    def test_sqrt_returns_smaller_residue(self):
        # oracle: exhaustive roots; the function must pick the smaller
        for p in (5, 7, 11, 13):
            field = GF(p)
            for x in range(p):
                roots = [r for r in range(p) if r * r % p == x]
                got = sqrt(field(x))
                if roots:
                    assert got == field(min(roots))
                else:
                    assert got is None

    def test_square_of_square(self):
        for p in (3, 5, 7):
            for x in GF(p).elements():
                assert is_square(x * x)
                root = sqrt(x * x)
                assert root is not None and root * root == x * x

    def test_square_count_odd_primes(self):
        # exactly (p-1)/2 nonzero squares, verified by exhaustion for p <= 97
        odd_primes = [
            3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
            53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
        ]
        for p in odd_primes:
            field = GF(p)
            count = sum(1 for x in field.elements() if x and is_square(x))
            assert count == (p - 1) // 2

    def test_gf2_everything_square(self):
        assert is_square(GF(2)(0)) and is_square(GF(2)(1))
