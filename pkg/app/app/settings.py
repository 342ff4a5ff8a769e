"""
Django settings for the graph uncertainty project.

The project is a batch command-line tool: there is no database, URL
routing or web server. Everything runs through ``manage.py`` commands.
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'graph-uncertainty-batch-tool-has-no-sessions',
)

DEBUG = bool(int(os.environ.get('DEBUG', 0)))

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'spectral',
    'curve',
    'ensemble',
    'diffusion',
    'report',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Logging goes to standard error so command output on stdout stays clean.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app_name: {
            'handlers': ['console'],
            'level': os.environ.get('GRAPH_UNCERTAINTY_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        }
        for app_name in (
            'core', 'spectral', 'curve', 'ensemble', 'diffusion', 'report',
        )
    },
}


# Numerical defaults, read through core.conf.curve_settings

GRAPH_UNCERTAINTY = {
    'DENSE_THRESHOLD': 512,
    'SOLVER_TOL': 1e-10,
    'MAX_ITER_FACTOR': 10,
    'GAP_TOL': 1e-8,
    'EPSILON_SCALE': 1e-6,
    'WORKERS': int(os.environ.get('GRAPH_UNCERTAINTY_WORKERS', 1)),
}

REST_FRAMEWORK = {
    'COERCE_DECIMAL_TO_STRING': False,
}
