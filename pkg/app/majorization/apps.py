from django.apps import AppConfig


class MajorizationConfig(AppConfig):
    name = 'majorization'
