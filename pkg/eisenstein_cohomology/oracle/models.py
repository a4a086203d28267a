from datetime import datetime

from django.db import models
from django.utils.translation import gettext_lazy as _


class VerificationRun(models.Model):
    """
    Audit trail for oracle verification runs.

    Records the parameters of each run of the formula-vs-oracle suite, how
    many checks were executed and which of them failed.

    This helps track:
    - Whether the nightly headline run still passes
    - How long exhaustive runs take as the box grows
    - The exact inputs of any failing check
    """

    n_max = models.PositiveSmallIntegerField(
        help_text=_("Largest rank n included in the run")
    )

    k_max = models.PositiveSmallIntegerField(
        help_text=_("Largest parabolic index k included in the run")
    )

    lambda_cap = models.PositiveSmallIntegerField(
        help_text=_("Largest entry of the dominant highest weights scanned")
    )

    started_at: datetime = models.DateTimeField(
        auto_now_add=True,
        help_text=_("When the run started")
    )

    completed_at = models.DateTimeField(
        null=True,
        blank=True,
        help_text=_("When the run completed (null if still running)")
    )

    checks_run = models.PositiveIntegerField(
        default=0,
        help_text=_("Number of individual checks executed")
    )

    failure_count = models.PositiveIntegerField(
        default=0,
        help_text=_("Number of checks whose closed form disagreed with the oracle")
    )

    success = models.BooleanField(
        default=False,
        help_text=_("Whether the run completed with no failures")
    )

    error_message = models.TextField(
        null=True,
        blank=True,
        help_text=_("Error details if the run aborted")
    )

    report = models.JSONField(
        default=dict,
        blank=True,
        help_text=_("Serialized suite report (checks_run and failures)")
    )

    class Meta:
        ordering = ["-started_at"]
        verbose_name = _("Verification Run")
        verbose_name_plural = _("Verification Runs")
        indexes = [
            models.Index(fields=["success"], name="oracle_veri_success_5b1c2e_idx"),
            models.Index(fields=["-started_at"], name="oracle_veri_started_9d4a7f_idx"),
        ]

    def __str__(self) -> str:
        status = "✓" if self.success else "✗"
        return (
            f"{status} n<={self.n_max}, k<={self.k_max}, lambda<={self.lambda_cap} - "
            f"{self.started_at:%Y-%m-%d %H:%M} ({self.checks_run} checks, {self.failure_count} failed)"
        )

    @property
    def duration_seconds(self) -> float | None:
        """Wall time of the run, or None while it is still running."""
        if self.completed_at and self.started_at:
            return (self.completed_at - self.started_at).total_seconds()
        return None
