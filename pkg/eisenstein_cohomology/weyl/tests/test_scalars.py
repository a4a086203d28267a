from fractions import Fraction

import pytest

from eisenstein_cohomology.weyl.exceptions import ConstraintError
from eisenstein_cohomology.weyl.scalars import (
    HalfInt,
    exact_half,
    format_rational,
    is_half_integral,
    to_rational,
)


class TestHalfInt:
    @pytest.mark.parametrize(
        "literal, twice",
        [
            ("1/2", 1),
            ("-3/2", -3),
            ("4", 8),
            ("6/2", 6),
            (" 5/1 ", 10),
        ],
    )
    def test_parse(self, literal: str, twice: int):
        assert HalfInt.parse(literal).twice_value == twice

    @pytest.mark.parametrize("literal", ["1/3", "x", "1/0", "", "0.25"])
    def test_parse_rejects(self, literal: str):
        with pytest.raises(ConstraintError):
            HalfInt.parse(literal)

    def test_rejects_non_integer_storage(self):
        with pytest.raises(ConstraintError):
            HalfInt(1.0)  # type: ignore[arg-type]
        with pytest.raises(ConstraintError):
            HalfInt(True)

    def test_arithmetic(self):
        half = HalfInt(1)
        assert half + half == HalfInt.from_int(1)
        assert HalfInt(5) - HalfInt(3) == HalfInt(2)
        assert -HalfInt(3) == HalfInt(-3)
        assert 3 * HalfInt(1) == HalfInt(3)
        assert HalfInt(1) * 4 == HalfInt.from_int(2)

    def test_ordering_follows_value(self):
        values = [HalfInt(3), HalfInt(-5), HalfInt(0), HalfInt(1)]
        assert sorted(values) == [HalfInt(-5), HalfInt(0), HalfInt(1), HalfInt(3)]

    def test_str(self):
        assert str(HalfInt(1)) == "1/2"
        assert str(HalfInt(-3)) == "-3/2"
        assert str(HalfInt(4)) == "2"
        assert str(HalfInt(0)) == "0"

    def test_fraction_conversion(self):
        assert HalfInt(5).to_fraction() == Fraction(5, 2)
        assert HalfInt.from_fraction(Fraction(-7, 2)) == HalfInt(-7)
        assert HalfInt.from_fraction(3) == HalfInt(6)
        with pytest.raises(ConstraintError):
            HalfInt.from_fraction(Fraction(1, 4))


def test_to_rational():
    assert to_rational(HalfInt(3)) == Fraction(3, 2)
    assert to_rational(2) == Fraction(2)
    with pytest.raises(ConstraintError):
        to_rational(True)


def test_is_half_integral():
    assert is_half_integral(Fraction(3, 2))
    assert is_half_integral(Fraction(4))
    assert not is_half_integral(Fraction(1, 3))


def test_format_rational():
    assert format_rational(Fraction(6, 2)) == "3"
    assert format_rational(Fraction(-1, 6)) == "-1/6"


def test_exact_half():
    assert exact_half(8, "x") == 4
    with pytest.raises(ConstraintError, match="not an integer"):
        exact_half(7, "Lower bound")
