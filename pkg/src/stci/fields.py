"""Exact scalar arithmetic: the rationals and prime residue fields.

Scalars are `fractions.Fraction` values in characteristic zero and plain
ints in ``range(p)`` in characteristic ``p``.  A `FieldSpec` bundles the
characteristic with the arithmetic on such scalars, so the polynomial
layer never branches on the coefficient representation.  No floating
point appears anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for the small moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The coefficient field: Q when the characteristic is 0, GF(p) otherwise."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0) -> None:
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(
                f"characteristic must be 0 or a prime, got {characteristic}"
            )
        self.characteristic = characteristic

    # -- construction -------------------------------------------------

    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def from_integer(self, n: int):
        if self.characteristic:
            return n % self.characteristic
        return Fraction(n)

    def from_fraction(self, numerator: int, denominator: int = 1):
        """Coerce ``numerator/denominator``; rejects denominators killed by p."""
        if denominator == 0:
            raise ZeroDivisionError("zero denominator")
        if self.characteristic:
            p = self.characteristic
            if denominator % p == 0:
                raise ValueError(
                    f"denominator {denominator} is divisible by the characteristic {p}"
                )
            return (numerator * pow(denominator, -1, p)) % p
        return Fraction(numerator, denominator)

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.characteristic if self.characteristic else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.characteristic else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.characteristic else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- formatting ----------------------------------------------------

    def format_scalar(self, a) -> str:
        """Canonical text form: reduced ``n`` or ``n/d`` over Q, residue over GF(p)."""
        if self.characteristic:
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.characteristic == other.characteristic

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.characteristic))

    def __repr__(self) -> str:
        if self.characteristic:
            return f"FieldSpec(GF({self.characteristic}))"
        return "FieldSpec(Q)"


#: the rationals, shared default for the whole package
QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    """The field with p elements, p prime."""
    if p == 0:
        raise ValueError("GF(0) is not a field; use QQ")
    return FieldSpec(p)
