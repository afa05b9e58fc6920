"""
Django settings used when linkbench runs outside a project.

Projects that install linkbench as an application can set `LINKBENCH` to a
dict of experiment defaults; the keys are those of the experiment config.
"""
import django
from django.conf import settings

LOGGER_NAME = 'linkbench'

VERBOSITY_LEVELS = {
    0: 'WARNING',
    1: 'INFO',
    2: 'DEBUG',
    3: 'DEBUG',
}


def logging_config(level='INFO'):
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'formatter': 'plain',
            },
        },
        'loggers': {
            LOGGER_NAME: {
                'handlers': ['console'],
                'level': level,
                'propagate': False,
            },
        },
    }


def configure(**overrides):
    if settings.configured:
        return
    options = {
        'INSTALLED_APPS': ('linkbench',),
        'USE_TZ': True,
        'LOGGING': logging_config(),
        'LINKBENCH': {},
    }
    options.update(overrides)
    settings.configure(**options)
    django.setup()


def project_defaults():
    try:
        return dict(settings.LINKBENCH)
    except AttributeError:
        return {}
