"""
Pydantic wire schema for exact scalars.

A half-integral scalar is written {"twice": 2x}. A coordinate outside (1/2)Z
(b-parts of restricted weights carry denominators dividing 2k) is written
{"num": p, "den": q} instead.
"""

from fractions import Fraction

from pydantic import BaseModel, Field, model_validator

from eisenstein_cohomology.weyl.scalars import HalfInt, Rational, is_half_integral, to_rational


class ScalarSchema(BaseModel):
    """One exact coordinate."""

    twice: int | None = Field(None, description="Twice the value, present when the value lies in (1/2)Z")
    num: int | None = Field(None, description="Numerator, used only for values outside (1/2)Z")
    den: int | None = Field(None, description="Positive denominator paired with num")

    @model_validator(mode="after")
    def check_shape(self) -> "ScalarSchema":
        if self.twice is not None:
            if self.num is not None or self.den is not None:
                raise ValueError("Use either 'twice' or 'num'/'den', not both")
        elif self.num is None or self.den is None or self.den <= 0:
            raise ValueError("Expected {'twice': int} or {'num': int, 'den': positive int}")
        return self

    @classmethod
    def from_value(cls, value: Rational) -> "ScalarSchema":
        value = to_rational(value)
        if is_half_integral(value):
            return cls(twice=int(value * 2))
        return cls(num=value.numerator, den=value.denominator)

    def to_fraction(self) -> Fraction:
        if self.twice is not None:
            return Fraction(self.twice, 2)
        return Fraction(self.num, self.den)

    def to_halfint(self) -> HalfInt:
        return HalfInt.from_fraction(self.to_fraction())

    def as_dict(self) -> dict:
        return self.model_dump(exclude_none=True)
