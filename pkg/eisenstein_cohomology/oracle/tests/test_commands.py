import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from eisenstein_cohomology.oracle.models import VerificationRun
from eisenstein_cohomology.oracle.services import SuiteFailure, SuiteReport


def run(*args: str) -> str:
    out = StringIO()
    call_command("verify", *args, stdout=out)
    return out.getvalue()


def test_passing_run():
    payload = json.loads(run("--n-max", "2", "--k-max", "2", "--lambda-cap", "1"))
    assert payload["passed"] is True
    assert payload["failures"] == []
    assert payload["parameters"] == {"n_max": 2, "k_max": 2, "lambda_cap": 1}


def test_defaults_from_settings(settings):
    settings.VERIFICATION_SUITE_DEFAULTS = {"n_max": 1, "k_max": 1, "lambda_cap": 0}
    payload = json.loads(run())
    assert payload["parameters"] == {"n_max": 1, "k_max": 1, "lambda_cap": 0}


def test_empty_range():
    payload = json.loads(run("--n-max", "0"))
    assert payload["checks_run"] == 0
    assert payload["passed"] is True


def test_failure_exit_status(monkeypatch):
    failing = SuiteReport(checks_run=1, failures=[SuiteFailure("kostant.eval_t", "x", "1/2", "3/2")])
    monkeypatch.setattr(
        "eisenstein_cohomology.oracle.management.commands.verify.run_suite",
        lambda *args, **kwargs: failing,
    )
    out = StringIO()
    with pytest.raises(CommandError, match="1 of 1 checks failed") as exc_info:
        call_command("verify", "--n-max", "1", "--format", "csv", stdout=out)
    assert exc_info.value.returncode == 1
    assert out.getvalue() == "check,input,expected,got\nkostant.eval_t,x,1/2,3/2\n"


def test_negative_parameters():
    with pytest.raises(CommandError) as exc_info:
        run("--n-max", "2", "--lambda-cap", "-1")
    assert exc_info.value.returncode == 2


def test_cap_guard():
    with pytest.raises(CommandError, match="exceeds the cap") as exc_info:
        run("--n-max", "3", "--k-max", "1", "--lambda-cap", "0", "--cap", "2")
    assert exc_info.value.returncode == 2


@pytest.mark.django_db
def test_record():
    payload = json.loads(run("--n-max", "2", "--k-max", "2", "--lambda-cap", "0", "--record"))
    run_obj = VerificationRun.objects.get(pk=payload["run_id"])
    assert run_obj.success
    assert run_obj.checks_run == payload["checks_run"]


@pytest.mark.django_db
def test_async(settings):
    settings.CELERY_TASK_ALWAYS_EAGER = True
    payload = json.loads(run("--n-max", "1", "--k-max", "1", "--lambda-cap", "0", "--async"))
    assert payload["queued"] is True
    assert payload["task_id"]
    assert VerificationRun.objects.count() == 1
