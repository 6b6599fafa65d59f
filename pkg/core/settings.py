"""
Django settings for the anomalous cancellation toolkit.

The project has no web surface and no database; Django supplies the settings,
the management commands, form validation and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.1/ref/settings/
"""

import sys
from pathlib import Path
from environs import Env

# Block values reach thousands of digits; decimal output must never be cut off.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


# Environment variables
env = Env()
env.read_env()


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = env.str("SECRET_KEY", "cancellation-toolkit-has-no-sessions")
DEBUG = env.bool("DEBUG", False)
LOG_LEVEL = env.str("LOG_LEVEL", "WARNING")


# Application definition

INSTALLED_APPS = [
    # Local
    "cancellation",
]


# No models are stored anywhere.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/4.1/topics/i18n/

LANGUAGE_CODE = "en"
TIME_ZONE = "Asia/Tokyo"
USE_I18N = True
USE_TZ = True


# Logging goes to stderr so that command output on stdout stays parseable.

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "{levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "loggers": {
        "cancellation": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}


# Enumeration settings

# Largest brute-force scan, in predicate evaluations, unless --work-limit is given.
CANCELLATION_WORK_LIMIT = env.int("CANCELLATION_WORK_LIMIT", 1_000_000_000)

# Worker processes used by the engines unless --jobs is given.
CANCELLATION_JOBS = env.int("CANCELLATION_JOBS", 1)

CANCELLATION_SCHEMA_VERSION = env.str("CANCELLATION_SCHEMA_VERSION", "1.0")
