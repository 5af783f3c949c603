from django.apps import AppConfig


class DomainLabConfig(AppConfig):
    name = 'domain_lab'
