"""
Management command to run the formula-vs-oracle verification suite.

Exits with status 1 when any check fails.

Usage:
    python manage.py verify                                  # settings.VERIFICATION_SUITE_DEFAULTS
    python manage.py verify --n-max 3 --k-max 3 --lambda-cap 1
    python manage.py verify --n-max 5 --record               # persist a VerificationRun
    python manage.py verify --async                          # queue the Celery task
"""

from typing import Any

from django.core.management.base import CommandParser

from eisenstein_cohomology.oracle.services import VerificationService, run_suite
from eisenstein_cohomology.oracle.services.suite import SuiteReport, suite_defaults
from eisenstein_cohomology.oracle.tasks import run_verification_suite_task
from eisenstein_cohomology.utils.commands import CommandResult, FormattedCommand


class Command(FormattedCommand):
    help = "Check every closed form against the brute-force Weyl group oracle"
    csv_columns = ["check", "input", "expected", "got"]

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--n-max", type=int, help="Largest rank n (default from settings)")
        parser.add_argument("--k-max", type=int, help="Largest parabolic index k (default from settings)")
        parser.add_argument("--lambda-cap", type=int, help="Largest highest-weight entry (default from settings)")
        parser.add_argument("--cap", type=int, help="Override the Weyl enumeration cap (never above the hard cap)")
        parser.add_argument(
            "--record",
            action="store_true",
            help="Persist the run as a VerificationRun",
        )
        parser.add_argument(
            "--async",
            dest="run_async",
            action="store_true",
            help="Queue the verification as a Celery task instead of running inline",
        )

    def build(self, **options: Any) -> CommandResult:
        defaults = suite_defaults()
        n_max = options["n_max"] if options["n_max"] is not None else defaults["n_max"]
        k_max = options["k_max"] if options["k_max"] is not None else defaults["k_max"]
        lambda_cap = options["lambda_cap"] if options["lambda_cap"] is not None else defaults["lambda_cap"]
        if min(n_max, k_max, lambda_cap) < 0:
            raise self.usage_error("--n-max, --k-max and --lambda-cap must be nonnegative")

        if options["run_async"]:
            task = run_verification_suite_task.delay(n_max=n_max, k_max=k_max, lambda_cap=lambda_cap)
            return CommandResult(payload={"queued": True, "task_id": task.id})

        if options["record"]:
            run = VerificationService().run(n_max=n_max, k_max=k_max, lambda_cap=lambda_cap, cap=options["cap"])
            if run.error_message:
                raise self.usage_error(run.error_message)
            report = SuiteReport.from_dict(run.report)
            payload = {**report.to_dict(), "run_id": run.pk}
        else:
            report = run_suite(n_max, k_max, lambda_cap, options["cap"])
            payload = report.to_dict()

        payload["parameters"] = {"n_max": n_max, "k_max": k_max, "lambda_cap": lambda_cap}
        return CommandResult(
            payload=payload,
            rows=[failure.to_dict() for failure in report.failures],
            ok=report.passed,
            failure_message=f"{len(report.failures)} of {report.checks_run} checks failed",
        )
