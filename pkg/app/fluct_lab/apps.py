from django.apps import AppConfig


class FluctLabConfig(AppConfig):
    name = 'fluct_lab'
