"""
Django settings for the lsverify project.
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# No request handling happens here; the key only satisfies Django's startup checks.
SECRET_KEY = 'lsverify-local-only-key'

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'django_crontab',
    'verification',
]


# Database
# Nothing is persisted; the default alias exists so django.contrib apps load.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# REST Framework settings (only the renderer is used, for structured reports)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNICODE_JSON': True,
    'COMPACT_JSON': True,
}


# Logging goes to stderr so it never interleaves with the report stream.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'verification': {
            'handlers': ['console'],
            'level': os.environ.get('LSVERIFY_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Verifier settings
LSVERIFY = {
    # truncation word length used when --order is omitted
    'DEFAULT_ORDER': 8,
    'RANDOM_SEED': 1515,
    'RANDOM_SAMPLES': 20,
    'PROP1_SAMPLES': 10,
    # acceptance ranges for the Bernoulli identity checks
    'BERNOULLI_MAX_N': 60,
    'EULER_MAX_N': 40,
    'GEN_EULER_MIN_N': 4,
    'GEN_EULER_MAX_N': 40,
    # as-printed, sum-corrected, or both (each variant's status in the report note)
    'GEN_EULER_VARIANT': 'both',
    'EQ4_MAX_WEIGHT': 20,
    'SU_POWER_MAX': 5,
}


# Cron job settings
CRONJOBS = [
    ('0 0 * * *', 'verification.cron.nightly_run_all', '>> /tmp/lsverify_nightly.log 2>&1'),
]
