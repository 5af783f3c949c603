from django.apps import AppConfig


class MaxentConfig(AppConfig):
    name = 'maxent'
