"""
Management command to list self-dual representatives at a given t.

Usage:
    python manage.py classify --n 3 --k 1 --lambda 0,0,0 --t 1/2
    python manage.py classify --n 3 --k 2 --lambda 1,0,0 --t 2
"""

from fractions import Fraction
from typing import Any

from django.core.management.base import CommandParser

from eisenstein_cohomology.kostant.classify import classify_at
from eisenstein_cohomology.kostant.schemas import TABLE_COLUMNS, ClassifiedRowSchema, flat_row
from eisenstein_cohomology.utils.commands import CommandResult, FormattedCommand
from eisenstein_cohomology.weyl.exceptions import ConstraintError


class Command(FormattedCommand):
    help = "List self-dual Kostant representatives with eval_t = t, tagged by family"
    csv_columns = TABLE_COLUMNS

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--n", type=int, required=True, help="Rank n of SO(2n+1)")
        parser.add_argument("--k", type=int, required=True, help="Parabolic index k (1 <= k <= n)")
        parser.add_argument("--lambda", dest="lam", type=str, help="Dominant highest weight as a comma list")
        parser.add_argument("--t", type=str, required=True, help='Evaluation point, e.g. "1/2" or "2"')

    def build(self, **options: Any) -> CommandResult:
        ctx = self.parse_context(options)
        lam = self.parse_lambda(options, ctx)
        try:
            target = Fraction(options["t"].strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ConstraintError(f"Malformed rational literal {options['t']!r}") from e

        entries = classify_at(ctx, lam, target)
        return CommandResult(
            payload=[ClassifiedRowSchema.from_entry(entry).as_dict() for entry in entries],
            rows=[flat_row(entry) for entry in entries],
        )
