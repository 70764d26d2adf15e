"""
Django settings for the lloyd project.

The project has no web surface: Django provides the settings layer, the
management-command front end and the optional run/report database.
"""

import os

from lloyd import __version__

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = os.getenv('LLOYD_SECRET_KEY', 'lloyd-local-only-not-a-secret')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'core.apps.CoreConfig',
    'measures.apps.MeasuresConfig',
    'free_models.apps.FreeModelsConfig',
    'ensemble.apps.EnsembleConfig',
    'spectra.apps.SpectraConfig',
    'verify.apps.VerifyConfig',
]


# Database
# Runs and check reports are stored only when a command gets --record.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv(
            'LLOYD_DATABASE', os.path.join(BASE_DIR, 'db.sqlite3')
        ),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

USE_TZ = True

TIME_ZONE = 'UTC'


# Numerics

LLOYD_VERSION = __version__

# dense symmetric eigensolves above this dimension are refused
DENSE_EIG_CAP = 4096

# absolute tolerance of the exact-curve quadratures
QUAD_ABS_TOL = 1e-10

LLOYD_WORKERS = int(os.getenv('LLOYD_WORKERS', '1'))

# numeric format of every CSV column
FLOAT_FORMAT = '%.12g'

# declared spectral weight outside the grid window above this is logged
TAIL_MASS_WARNING = 0.01


# Logging

LLOYD_LOG_LEVEL = os.getenv('LLOYD_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LLOYD_LOG_LEVEL,
            'propagate': False,
        }
        for app in (
            'core', 'measures', 'free_models', 'ensemble', 'spectra', 'verify'
        )
    },
}
