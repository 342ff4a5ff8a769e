from django.apps import AppConfig


class CurveConfig(AppConfig):
    name = 'curve'
    verbose_name = 'Uncertainty curves'
