from fractions import Fraction

from eisenstein_cohomology.kostant.classify import classify_table
from eisenstein_cohomology.kostant.degrees import DegreeRange
from eisenstein_cohomology.kostant.representatives import HighestWeight, enumerate_kostant
from eisenstein_cohomology.kostant.schemas import (
    ClassifiedRowSchema,
    DegreeRangeSchema,
    KostantRepSchema,
    flat_row,
    table_order,
)
from eisenstein_cohomology.weyl.rootsys import RankContext
from eisenstein_cohomology.weyl.scalars import HalfInt


def test_kostant_rep_schema(ctx_3_1, pair_i3):
    rep = next(r for r in enumerate_kostant(ctx_3_1) if r.pair == pair_i3)
    schema = KostantRepSchema.from_rep(rep)
    assert schema.model_dump() == {
        "I": [3],
        "J": [],
        "n": 3,
        "k": 1,
        "length": 3,
        "perm": [2, 3, 1],
        "signs": [1, 1, -1],
    }
    restored = schema.to_rep()
    assert restored == rep
    assert restored.w == rep.w
    assert restored.length == rep.length


def test_classified_row(ctx_3_1, zero_weight_3):
    entry = next(e for e in classify_table(ctx_3_1, zero_weight_3) if e.pair.I == (3,))
    row = ClassifiedRowSchema.from_entry(entry)
    assert row.as_dict() == {
        "n": 3,
        "k": 1,
        "I": [3],
        "J": [],
        "length": 3,
        "perm": [2, 3, 1],
        "signs": [1, 1, -1],
        "t": {"twice": 1},
        "mu": [{"twice": 0}, {"twice": 2}, {"twice": 2}],
        "self_dual": True,
        "family": ["half"],
    }
    assert row.t_value() == HalfInt(1)
    assert row.mu_value() == entry.mu


def test_non_half_integral_mu_uses_num_den():
    # k = 3 spreads the a-part over three coordinates
    ctx = RankContext(3, 3)
    entries = classify_table(ctx, HighestWeight.parse("1,0,0"))
    rows = [ClassifiedRowSchema.from_entry(entry).as_dict() for entry in entries]
    cells = [cell for row in rows for cell in row["mu"]]
    assert any("num" in cell for cell in cells)
    for entry, row in zip(entries, rows):
        assert ClassifiedRowSchema.model_validate(row).mu_value() == entry.mu


def test_degree_range_schema():
    schema = DegreeRangeSchema.from_range(DegreeRange(4, 5))
    assert schema.model_dump() == {"lo": 4, "hi": 5}
    assert schema.to_range() == DegreeRange(4, 5)


def test_table_order(ctx_3_1, zero_weight_3):
    ordered = table_order(classify_table(ctx_3_1, zero_weight_3))
    assert [(entry.pair.I, entry.pair.J) for entry in ordered] == [
        ((1,), ()),
        ((2,), ()),
        ((3,), ()),
        ((), (3,)),
        ((), (2,)),
        ((), (1,)),
    ]


def test_flat_row(ctx_3_1, zero_weight_3):
    entry = next(e for e in classify_table(ctx_3_1, zero_weight_3) if e.pair.I == (3,))
    assert flat_row(entry) == {
        "n": 3,
        "k": 1,
        "I": [3],
        "J": [],
        "length": 3,
        "t_twice": "1",
        "mu": ["0", "2", "2"],
        "self_dual": True,
        "family": ["half"],
    }
    assert Fraction(flat_row(entry)["t_twice"]) / 2 == entry.t.to_fraction()
