from fractions import Fraction

import pytest

from eisenstein_cohomology.utils.rendering import (
    OutputFormat,
    flat_cell,
    render,
    render_csv,
    render_json,
    render_markdown,
    twice_cell,
)
from eisenstein_cohomology.weyl.scalars import HalfInt

ROWS = [
    {"kind": "Regular", "lo": 6, "hi": 6, "notes": ["t=1/2", "pole_at_half=false"]},
    {"kind": "NoClass", "lo": None, "hi": None, "notes": []},
]
COLUMNS = ["kind", "lo", "hi", "notes"]


@pytest.mark.parametrize(
    "value, expected",
    [
        (None, ""),
        (True, "true"),
        (False, "false"),
        ([1, 3], "1;3"),
        ((), ""),
        (HalfInt(-3), "-3/2"),
        (Fraction(2, 3), "2/3"),
        (7, "7"),
    ],
)
def test_flat_cell(value, expected: str):
    assert flat_cell(value) == expected


def test_twice_cell():
    assert twice_cell(HalfInt(-5)) == "-5"
    assert twice_cell(Fraction(1, 3)) == "2/3"
    assert twice_cell(Fraction(3, 2)) == "3"


def test_render_json_is_sorted():
    assert render_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_render_csv():
    assert render_csv(ROWS, COLUMNS) == (
        "kind,lo,hi,notes\n"
        "Regular,6,6,t=1/2;pole_at_half=false\n"
        "NoClass,,,\n"
    )


def test_render_markdown_escapes_pipes():
    output = render_markdown([{"kind": "a|b", "lo": 1, "hi": 2, "notes": []}], COLUMNS)
    assert output == "| kind | lo | hi | notes |\n|---|---|---|---|\n| a\\|b | 1 | 2 |  |\n"


def test_render_dispatch():
    payload = {"rows": 2}
    assert render(OutputFormat.JSON, payload, ROWS, COLUMNS) == render_json(payload)
    assert render("csv", payload, ROWS, COLUMNS) == render_csv(ROWS, COLUMNS)
    assert render("markdown", payload, ROWS, COLUMNS) == render_markdown(ROWS, COLUMNS)
