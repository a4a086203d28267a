"""
Exact scalars.

HalfInt is the scalar of evaluation points and of rho coordinates: a value
in (1/2)Z stored as the integer twice_value. General coordinates (for example
the b-part of a restricted weight, whose denominators divide 2k) are plain
fractions.Fraction values; HalfInt is the constrained view on those.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from eisenstein_cohomology.weyl.exceptions import ConstraintError

Rational = Union[int, Fraction, "HalfInt"]


@dataclass(frozen=True, order=True)
class HalfInt:
    """
    A half-integer twice_value / 2.

    Ordering is the ordering of twice_value, so HalfInt values sort like the
    rationals they represent.

    Examples:
        HalfInt(1)            -> 1/2
        HalfInt.from_int(2)   -> 2
        HalfInt.parse("-3/2") -> -3/2
    """

    twice_value: int

    def __post_init__(self) -> None:
        if isinstance(self.twice_value, bool) or not isinstance(self.twice_value, int):
            raise ConstraintError(f"twice_value must be an integer, got {self.twice_value!r}")

    @classmethod
    def from_int(cls, value: int) -> HalfInt:
        return cls(2 * value)

    @classmethod
    def from_fraction(cls, value: Rational) -> HalfInt:
        """Convert an exact rational, raising ConstraintError if it is not in (1/2)Z."""
        if isinstance(value, HalfInt):
            return value
        doubled = Fraction(value) * 2
        if doubled.denominator != 1:
            raise ConstraintError(f"{value} is not a half-integer")
        return cls(doubled.numerator)

    @classmethod
    def parse(cls, literal: str) -> HalfInt:
        """
        Parse "p/2", "p/1" or an integer literal.

        Args:
            literal: Text such as "1/2", "-3/2" or "4"

        Raises:
            ConstraintError: If the text is not a half-integer literal
        """
        try:
            value = Fraction(literal.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ConstraintError(f"Malformed half-integer literal {literal!r}") from e
        return cls.from_fraction(value)

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __add__(self, other: HalfInt) -> HalfInt:
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.twice_value + other.twice_value)

    def __sub__(self, other: HalfInt) -> HalfInt:
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.twice_value - other.twice_value)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice_value)

    def __mul__(self, factor: int) -> HalfInt:
        if isinstance(factor, bool) or not isinstance(factor, int):
            return NotImplemented
        return HalfInt(self.twice_value * factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


def to_rational(value: Rational) -> Fraction:
    """Coerce int, Fraction or HalfInt to Fraction."""
    if isinstance(value, HalfInt):
        return value.to_fraction()
    if isinstance(value, bool):
        raise ConstraintError("Booleans are not scalars")
    return Fraction(value)


def is_half_integral(value: Fraction) -> bool:
    return (value * 2).denominator == 1


def format_rational(value: Fraction) -> str:
    """Render an exact rational as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def exact_half(value: int, what: str) -> int:
    """
    Halve an integer that must be even.

    Degree formulas are written as (1/2)(...); their integrality is asserted
    rather than rounded.
    """
    quotient, remainder = divmod(value, 2)
    if remainder:
        raise ConstraintError(f"{what} is not an integer: {value}/2")
    return quotient
