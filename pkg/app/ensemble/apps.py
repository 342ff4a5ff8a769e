from django.apps import AppConfig


class EnsembleConfig(AppConfig):
    name = 'ensemble'
    verbose_name = 'Erdos-Renyi expected curves'
