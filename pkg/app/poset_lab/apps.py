from django.apps import AppConfig


class PosetLabConfig(AppConfig):
    name = 'poset_lab'
