"""
Output renderers shared by the management commands.

JSON output is the full structured payload with sorted keys. CSV and Markdown
are flat views over a list of rows with a fixed column order. None of the
renderers adds timestamps or other run-dependent text, so identical inputs
give byte-identical output.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable

from django.db import models

from eisenstein_cohomology.weyl.scalars import HalfInt, format_rational


class OutputFormat(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
    MARKDOWN = "markdown", "Markdown"


def render_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: Iterable[dict], columns: list[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: flat_cell(row.get(column)) for column in columns})
    return buffer.getvalue()


def render_markdown(rows: Iterable[dict], columns: list[str]) -> str:
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join("---" for _ in columns) + "|",
    ]
    for row in rows:
        cells = [flat_cell(row.get(column)).replace("|", "\\|") for column in columns]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render(fmt: str, payload: Any, rows: list[dict], columns: list[str]) -> str:
    if fmt == OutputFormat.CSV:
        return render_csv(rows, columns)
    if fmt == OutputFormat.MARKDOWN:
        return render_markdown(rows, columns)
    return render_json(payload)


def flat_cell(value: Any) -> str:
    """Render one flat cell: lists are semicolon-joined, booleans lowercase, None empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(flat_cell(item) for item in value)
    if isinstance(value, HalfInt):
        return str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def twice_cell(value: HalfInt | Fraction) -> str:
    """Twice a scalar, as an integer literal when possible (p/q otherwise)."""
    if isinstance(value, HalfInt):
        return str(value.twice_value)
    return format_rational(value * 2)
