from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = True
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="local-eisenstein-cohomology-7Qm2rVx9LkT4wPz8HnY3cB6dF1gJ5sA0",
)
# https://docs.djangoproject.com/en/dev/ref/settings/#allowed-hosts
ALLOWED_HOSTS = ["localhost", "0.0.0.0", "127.0.0.1"]

# CACHES
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#caches
CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
        "LOCATION": "",
    }
}

# Celery
# ------------------------------------------------------------------------------
# https://docs.celeryq.dev/en/stable/userguide/configuration.html#task-always-eager
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=False)
# https://docs.celeryq.dev/en/stable/userguide/configuration.html#task-eager-propagates
CELERY_TASK_EAGER_PROPAGATES = False
# Your stuff...
# ------------------------------------------------------------------------------
# Quick local runs: `verify` without arguments covers n <= 3 only
VERIFICATION_SUITE_DEFAULTS = {
    "n_max": env.int("VERIFY_N_MAX", default=3),
    "k_max": env.int("VERIFY_K_MAX", default=3),
    "lambda_cap": env.int("VERIFY_LAMBDA_CAP", default=1),
}
LOGGING["loggers"]["eisenstein_cohomology"]["level"] = env.str("EISENSTEIN_LOG_LEVEL", default="DEBUG")  # noqa: F405
