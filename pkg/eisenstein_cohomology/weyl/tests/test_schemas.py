from fractions import Fraction

import pytest
from pydantic import ValidationError

from eisenstein_cohomology.weyl.scalars import HalfInt
from eisenstein_cohomology.weyl.schemas import ScalarSchema


def as_json(value) -> dict:
    return ScalarSchema.from_value(value).as_dict()


class TestScalarSchema:
    def test_half_integers_use_twice(self):
        assert as_json(HalfInt(1)) == {"twice": 1}
        assert as_json(3) == {"twice": 6}
        assert as_json(Fraction(-5, 2)) == {"twice": -5}

    def test_other_rationals_use_num_den(self):
        assert as_json(Fraction(-1, 6)) == {"num": -1, "den": 6}

    def test_to_halfint(self):
        assert ScalarSchema(twice=3).to_halfint() == HalfInt(3)
        assert ScalarSchema(num=2, den=3).to_fraction() == Fraction(2, 3)

    @pytest.mark.parametrize(
        "payload",
        [
            {},
            {"twice": 1, "num": 1, "den": 2},
            {"num": 1},
            {"num": 1, "den": 0},
            {"num": 1, "den": -2},
        ],
    )
    def test_rejects_malformed(self, payload: dict):
        with pytest.raises(ValidationError):
            ScalarSchema.model_validate(payload)
