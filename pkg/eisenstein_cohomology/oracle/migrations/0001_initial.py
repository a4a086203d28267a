# Generated by Django 4.2.7 on 2026-10-19 09:12

from django.db import migrations, models


class Migration(migrations.Migration):
    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="VerificationRun",
            fields=[
                ("id", models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name="ID")),
                ("n_max", models.PositiveSmallIntegerField(help_text="Largest rank n included in the run")),
                ("k_max", models.PositiveSmallIntegerField(help_text="Largest parabolic index k included in the run")),
                (
                    "lambda_cap",
                    models.PositiveSmallIntegerField(
                        help_text="Largest entry of the dominant highest weights scanned"
                    ),
                ),
                ("started_at", models.DateTimeField(auto_now_add=True, help_text="When the run started")),
                (
                    "completed_at",
                    models.DateTimeField(
                        blank=True, help_text="When the run completed (null if still running)", null=True
                    ),
                ),
                (
                    "checks_run",
                    models.PositiveIntegerField(default=0, help_text="Number of individual checks executed"),
                ),
                (
                    "failure_count",
                    models.PositiveIntegerField(
                        default=0, help_text="Number of checks whose closed form disagreed with the oracle"
                    ),
                ),
                (
                    "success",
                    models.BooleanField(default=False, help_text="Whether the run completed with no failures"),
                ),
                (
                    "error_message",
                    models.TextField(blank=True, help_text="Error details if the run aborted", null=True),
                ),
                (
                    "report",
                    models.JSONField(
                        blank=True, default=dict, help_text="Serialized suite report (checks_run and failures)"
                    ),
                ),
            ],
            options={
                "verbose_name": "Verification Run",
                "verbose_name_plural": "Verification Runs",
                "ordering": ["-started_at"],
                "indexes": [
                    models.Index(fields=["success"], name="oracle_veri_success_5b1c2e_idx"),
                    models.Index(fields=["-started_at"], name="oracle_veri_started_9d4a7f_idx"),
                ],
            },
        ),
    ]
