import logging

from django.core.management.base import BaseCommand, CommandError

from core.cli import RunConfig, build_parser, run
from core.exceptions import OrdlabError, UnknownFlag

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    """Order-theoretic checks: majorization, posets, maximum entropy,
    fluctuation theorems and domains"""
    help = ("Order-theoretic checks: majorization, posets, maximum entropy, "
            "fluctuation theorems and domains")
    requires_system_checks = []

    def add_arguments(self, parser):
        build_parser(parser)

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(options)
            payload = run(config)
        except OrdlabError as error:
            logger.debug("ordlab failed with %s", error.code)
            returncode = 2 if isinstance(error, UnknownFlag) else 1
            raise CommandError(str(error), returncode=returncode) from error
        self.stdout.write(payload)
