"""Exact scalar arithmetic over the rationals and over prime fields.

Two kinds of field are supported:

  * ``Q``     -- arbitrary-precision rationals backed by fractions.Fraction,
                 always stored in lowest terms with a positive denominator;
  * ``GF(p)`` -- integers modulo a prime p, stored as canonical residues
                 in [0, p).

Elements carry their field descriptor and refuse mixed-field arithmetic.
Everything is exact; no floating point is used anywhere in this package.
Square testing uses Euler's criterion over GF(p) and perfect-square checks
on the reduced numerator/denominator over Q.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ConstructionError, DivisionByZero, FieldMismatch, ParseError

RATIONALS = "rationals"
PRIME = "prime"

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Descriptor for Q or GF(p); also acts as an element factory."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind == RATIONALS:
            if modulus is not None:
                raise ConstructionError("the rationals take no modulus")
        elif kind == PRIME:
            if modulus is None or modulus < 2:
                raise ConstructionError("a prime field needs a modulus >= 2")
            if not is_prime(modulus):
                raise ConstructionError(f"modulus {modulus} is not prime")
        else:
            raise ConstructionError(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.modulus  # type: ignore[return-value]

    def is_finite(self) -> bool:
        return self.kind == PRIME

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return f"Field({self})"

    def __str__(self):
        return "Q" if self.kind == RATIONALS else f"GF({self.modulus})"

    @staticmethod
    def parse(text: str) -> "Field":
        """Parse a field literal: ``Q`` or ``GF(p)``."""
        text = text.strip()
        if text == "Q":
            return QQ
        m = re.fullmatch(r"GF\(\s*(\d+)\s*\)", text)
        if m:
            return GF(int(m.group(1)))
        raise ParseError(f"bad field literal {text!r} (expected Q or GF(p))")

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, Fraction, literal string, or same-field element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return self._from_literal(value)
        if self.kind == PRIME:
            p = self.modulus
            if isinstance(value, int):
                return FieldElement(self, value % p)
            if isinstance(value, Fraction):
                den = value.denominator % p
                if den == 0:
                    raise DivisionByZero(f"denominator of {value} vanishes mod {p}")
                return FieldElement(self, value.numerator * pow(den, -1, p) % p)
            raise ConstructionError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, (int, Fraction)):
            return FieldElement(self, Fraction(value))
        raise ConstructionError(f"cannot coerce {value!r} into {self}")

    def _from_literal(self, text: str) -> "FieldElement":
        text = text.strip()
        m = re.fullmatch(r"(-?\d+)(?:/(\d+))?", text)
        if not m:
            raise ParseError(f"bad scalar literal {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise DivisionByZero(f"zero denominator in literal {text!r}")
        return self(Fraction(num, den))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def elements(self):
        """Iterate over all field elements (finite fields only)."""
        from .errors import NeedsFiniteField

        if self.kind != PRIME:
            raise NeedsFiniteField("cannot enumerate the rationals")
        for i in range(self.modulus):  # type: ignore[arg-type]
            yield FieldElement(self, i)


QQ = Field(RATIONALS)


def GF(p: int) -> Field:
    """The prime field with p elements; p must be prime."""
    return Field(PRIME, p)


class FieldElement:
    """An exact scalar together with its field descriptor.

    GF(p) values are canonical residues (int in [0, p)); rational values are
    Fractions in lowest terms.  Arithmetic with plain ints is allowed and
    coerces the int; arithmetic between elements of different fields raises
    FieldMismatch.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"mixed-field arithmetic: {self.field} vs {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind == PRIME:
            return FieldElement(self.field, (self.value + other.value) % self.field.modulus)
        return FieldElement(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind == PRIME:
            return FieldElement(self.field, (self.value - other.value) % self.field.modulus)
        return FieldElement(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind == PRIME:
            return FieldElement(self.field, (self.value * other.value) % self.field.modulus)
        return FieldElement(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        if self.field.kind == PRIME:
            return FieldElement(self.field, (-self.value) % self.field.modulus)
        return FieldElement(self.field, -self.value)

    def inv(self) -> "FieldElement":
        if not self:
            raise DivisionByZero(f"inverse of zero in {self.field}")
        if self.field.kind == PRIME:
            return FieldElement(self.field, pow(self.value, -1, self.field.modulus))
        return FieldElement(self.field, 1 / self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"<{self} in {self.field}>"

    def __str__(self):
        return str(self.value)


def is_square(x: FieldElement) -> bool:
    """True iff some y in the field satisfies y*y == x.

    GF(p): Euler's criterion, x^((p-1)/2) in {0, 1} (every element of GF(2)
    is a square).  Q: nonnegative and both numerator and denominator of the
    reduced fraction are perfect integer squares.
    """
    if x.field.kind == PRIME:
        p = x.field.modulus
        return pow(x.value, (p - 1) // 2, p) <= 1
    v: Fraction = x.value
    if v < 0:
        return False
    return (
        math.isqrt(v.numerator) ** 2 == v.numerator
        and math.isqrt(v.denominator) ** 2 == v.denominator
    )


def sqrt(x: FieldElement) -> FieldElement | None:
    """Some y with y*y == x, or None when x is not a square.

    Deterministic: over GF(p) the smaller of the two canonical residues is
    returned (found by exhaustive scan, adequate at desk scale); over Q the
    nonnegative root is returned.
    """
    if x.field.kind == PRIME:
        p = x.field.modulus
        for r in range(p // 2 + 1):
            if r * r % p == x.value:
                return FieldElement(x.field, r)
        return None
    if not is_square(x):
        return None
    v: Fraction = x.value
    return FieldElement(x.field, Fraction(math.isqrt(v.numerator), math.isqrt(v.denominator)))
