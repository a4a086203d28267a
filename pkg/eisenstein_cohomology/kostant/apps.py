from django.apps import AppConfig


class KostantConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "eisenstein_cohomology.kostant"
    verbose_name = "Kostant Representatives"
