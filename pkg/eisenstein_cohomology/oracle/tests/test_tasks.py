import pytest
from celery.result import EagerResult

from eisenstein_cohomology.oracle.models import VerificationRun
from eisenstein_cohomology.oracle.tasks import run_verification_suite_task, verify_rank_task

pytestmark = pytest.mark.django_db


def test_run_verification_suite_task(settings):
    """The persisted suite run executes eagerly and records a VerificationRun."""
    settings.CELERY_TASK_ALWAYS_EAGER = True
    task_result = run_verification_suite_task.delay(n_max=2, k_max=2, lambda_cap=1)
    assert isinstance(task_result, EagerResult)
    assert task_result.result["success"] is True
    run = VerificationRun.objects.get(pk=task_result.result["run_id"])
    assert run.checks_run == task_result.result["checks_run"]


def test_verify_rank_task(settings):
    settings.CELERY_TASK_ALWAYS_EAGER = True
    task_result = verify_rank_task.delay(2, 2, 1)
    assert isinstance(task_result, EagerResult)
    assert task_result.result["passed"] is True
    assert task_result.result["checks_run"] > 0
