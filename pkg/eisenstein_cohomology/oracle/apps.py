from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class OracleConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "eisenstein_cohomology.oracle"
    verbose_name = _("Verification Oracle")
