"""
Admin configuration for the oracle app.

Provides a read-only view of:
- VerificationRun: Audit trail of formula-vs-oracle verification runs
"""

from django.contrib import admin
from django.http import HttpRequest
from django.utils.html import format_html
from django.utils.translation import gettext_lazy as _

from eisenstein_cohomology.oracle.models import VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    """Admin for viewing verification runs."""

    list_display = [
        "__str__",
        "status_badge",
        "checks_run",
        "failure_count",
        "duration_display",
        "started_at",
    ]
    list_filter = ["success", "started_at"]
    search_fields = ["error_message"]
    readonly_fields = [
        "n_max",
        "k_max",
        "lambda_cap",
        "started_at",
        "completed_at",
        "checks_run",
        "failure_count",
        "success",
        "error_message",
        "report",
    ]
    ordering = ["-started_at"]
    date_hierarchy = "started_at"

    fieldsets = (
        (None, {
            "fields": ("success", "error_message", "started_at", "completed_at"),
        }),
        (_("Parameters"), {
            "fields": ("n_max", "k_max", "lambda_cap"),
        }),
        (_("Results"), {
            "fields": ("checks_run", "failure_count"),
        }),
        (_("Report"), {
            "fields": ("report",),
            "classes": ("collapse",),
        }),
    )

    def has_add_permission(self, request: HttpRequest) -> bool:
        """Runs are created by the verification service, not manually."""
        return False

    def has_change_permission(self, request: HttpRequest, obj=None) -> bool:
        return False

    @admin.display(description=_("Status"))
    def status_badge(self, obj: VerificationRun) -> str:
        if obj.success:
            return format_html('<span style="color: #059669; font-weight: bold;">✓ Passed</span>')
        if obj.completed_at is None:
            return format_html('<span style="color: #d97706;">… Running</span>')
        return format_html('<span style="color: #dc2626; font-weight: bold;">✗ Failed</span>')

    @admin.display(description=_("Duration"))
    def duration_display(self, obj: VerificationRun) -> str:
        seconds = obj.duration_seconds
        if seconds is None:
            return "-"
        return f"{seconds:.1f}s"
