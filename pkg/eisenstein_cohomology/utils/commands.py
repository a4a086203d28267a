"""
Base class for the formatted management commands.

Subclasses implement add_command_arguments() and build(); the base class adds
the global --format / --out flags, renders the result and maps library errors
to exit codes:

    0  success
    1  verification failure (raised by the command itself)
    2  usage error (any WeylError, bad flag combinations)
"""

import logging
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from eisenstein_cohomology.kostant.representatives import HighestWeight
from eisenstein_cohomology.utils.rendering import OutputFormat, render
from eisenstein_cohomology.weyl.exceptions import WeylError
from eisenstein_cohomology.weyl.rootsys import RankContext

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


class CommandResult:
    """Structured payload for JSON plus the flat rows for CSV/Markdown."""

    def __init__(self, payload: Any, rows: list[dict] | None = None, ok: bool = True, failure_message: str = ""):
        self.payload = payload
        self.rows = rows if rows is not None else []
        self.ok = ok
        self.failure_message = failure_message


class FormattedCommand(BaseCommand):
    csv_columns: list[str] = []

    def add_arguments(self, parser: CommandParser) -> None:
        self.add_command_arguments(parser)
        parser.add_argument(
            "--format",
            choices=OutputFormat.values,
            default=OutputFormat.JSON,
            help="Output format (default: json)",
        )
        parser.add_argument(
            "--out",
            type=str,
            help="Write output to FILE instead of stdout",
        )

    def add_command_arguments(self, parser: CommandParser) -> None:
        pass

    def build(self, **options: Any) -> CommandResult:
        raise NotImplementedError

    def handle(self, *args: Any, **options: Any) -> None:
        try:
            result = self.build(**options)
        except WeylError as e:
            logger.info(f"{self.__class__.__module__}: usage error: {e}")
            raise CommandError(str(e), returncode=USAGE_ERROR) from e

        output = render(options["format"], result.payload, result.rows, self.csv_columns)
        if options.get("out"):
            Path(options["out"]).write_text(output, encoding="utf-8")
        else:
            self.stdout.write(output, ending="")

        if not result.ok:
            raise CommandError(result.failure_message or "Verification failed", returncode=VERIFICATION_FAILURE)

    # Shared argument parsing

    def usage_error(self, message: str) -> CommandError:
        return CommandError(message, returncode=USAGE_ERROR)

    def parse_context(self, options: dict) -> RankContext:
        return RankContext(options["n"], options["k"])

    def parse_lambda(self, options: dict, ctx: RankContext) -> HighestWeight:
        literal = options.get("lam")
        lam = HighestWeight.zero(ctx.n) if literal is None else HighestWeight.parse(literal)
        lam.check_rank(ctx)
        return lam


def parse_index_set(literal: str | None) -> list[int]:
    """Parse "1,3" (or an empty string) into a list of indices."""
    if not literal:
        return []
    try:
        return [int(part) for part in literal.split(",") if part.strip()]
    except ValueError as e:
        raise CommandError(f"Malformed index list {literal!r}", returncode=USAGE_ERROR) from e
