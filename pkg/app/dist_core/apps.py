from django.apps import AppConfig


class DistCoreConfig(AppConfig):
    name = 'dist_core'
