"""
Django settings for the ordlab project.

The project has no database and serves no URLs; it hosts the library
applications and the `ordlab` management command.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/3.2/ref/settings/
"""

import os

from hypothesis import settings as hypothesis_settings

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = os.environ.get('ORDLAB_SECRET_KEY', 'ordlab-local-only')

DEBUG = os.environ.get('ORDLAB_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'dist_core',
    'majorization',
    'poset_lab',
    'maxent',
    'fluct_lab',
    'domain_lab',
]

MIDDLEWARE = []

TEMPLATES = []


# No persistence: every check works on the files it is given

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/3.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Django REST framework renders the JSON output of the command

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COMPACT_JSON': True,
    'STRICT_JSON': True,
    'UNICODE_JSON': True,
}


# ordlab

ORDLAB_VERSION = os.environ.get('ORDLAB_VERSION', '1.0.0')

ORDLAB_JOBS = int(os.environ.get('ORDLAB_JOBS', '1'))

ORDLAB_SEED = 0

ORDLAB_LOG_LEVEL = os.environ.get('ORDLAB_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': ORDLAB_LOG_LEVEL,
    },
}


# Property-based tests: some examples enumerate small posets or chains

hypothesis_settings.register_profile('ordlab', deadline=None,
                                     max_examples=100)
hypothesis_settings.load_profile(
    os.environ.get('HYPOTHESIS_PROFILE', 'ordlab')
)
