"""
Management command to print the Kostant table of (n, k, lambda).

One row per representative of W^{P_k}: I, J, length, t, mu_w, self-duality
and family tags. Rows are sorted by t descending, then length ascending.

Usage:
    python manage.py table --n 3 --k 1 --lambda 0,0,0
    python manage.py table --n 4 --k 2 --lambda 2,1,0,0 --format csv
    python manage.py table --n 3 --k 3 --format markdown --out table.md
"""

from typing import Any

from django.core.management.base import CommandParser

from eisenstein_cohomology.kostant.classify import classify_table
from eisenstein_cohomology.kostant.schemas import TABLE_COLUMNS, ClassifiedRowSchema, flat_row, table_order
from eisenstein_cohomology.utils.commands import CommandResult, FormattedCommand


class Command(FormattedCommand):
    help = "Tabulate Kostant representatives with t, mu_w and self-duality"
    csv_columns = TABLE_COLUMNS

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--n", type=int, required=True, help="Rank n of SO(2n+1)")
        parser.add_argument("--k", type=int, required=True, help="Parabolic index k (1 <= k <= n)")
        parser.add_argument(
            "--lambda",
            dest="lam",
            type=str,
            help="Dominant highest weight as a comma list (default: zero weight)",
        )

    def build(self, **options: Any) -> CommandResult:
        ctx = self.parse_context(options)
        lam = self.parse_lambda(options, ctx)
        entries = table_order(classify_table(ctx, lam))
        return CommandResult(
            payload=[ClassifiedRowSchema.from_entry(entry).as_dict() for entry in entries],
            rows=[flat_row(entry) for entry in entries],
        )
