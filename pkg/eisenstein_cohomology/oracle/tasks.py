"""
Celery tasks for the oracle app.

Tasks for:
- The persisted headline run (run_verification_suite_task, scheduled nightly)
- One rank slice of the suite (verify_rank_task); slice reports merge with
  SuiteReport.merge
"""

import logging

from celery import shared_task

from eisenstein_cohomology.oracle.services import VerificationService, run_rank

logger = logging.getLogger(__name__)


@shared_task(bind=True, max_retries=0)
def run_verification_suite_task(
    self,
    n_max: int | None = None,
    k_max: int | None = None,
    lambda_cap: int | None = None,
) -> dict:
    """
    Run the verification suite and persist a VerificationRun.

    Args:
        n_max: Largest rank (default from settings.VERIFICATION_SUITE_DEFAULTS)
        k_max: Largest parabolic index
        lambda_cap: Largest highest-weight entry

    Returns:
        Dict with the run id and its outcome
    """
    logger.info(f"Starting run_verification_suite_task: n_max={n_max}, k_max={k_max}, lambda_cap={lambda_cap}")

    run = VerificationService().run(n_max=n_max, k_max=k_max, lambda_cap=lambda_cap)

    result = {
        "run_id": run.pk,
        "success": run.success,
        "checks_run": run.checks_run,
        "failure_count": run.failure_count,
        "error_message": run.error_message,
    }
    if not run.success:
        logger.warning(f"Verification run {run.pk} did not pass: {result}")
    return result


@shared_task
def verify_rank_task(n: int, k_max: int, lambda_cap: int) -> dict:
    """
    Verify a single rank and return the serialized SuiteReport.

    Args:
        n: Rank to verify
        k_max: Largest parabolic index
        lambda_cap: Largest highest-weight entry

    Returns:
        SuiteReport.to_dict() for rank n
    """
    logger.info(f"Starting verify_rank_task: n={n}, k_max={k_max}, lambda_cap={lambda_cap}")
    return run_rank(n, k_max, lambda_cap).to_dict()
