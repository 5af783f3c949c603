"""Subcommand tree of the ordlab command

Each application contributes one group of subcommands from its own `cli`
module, registered with `command_group` and discovered at parser build
time.
"""
import argparse
import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Tuple

from django.conf import settings
from django.core.management.base import CommandError, CommandParser
from django.utils.module_loading import autodiscover_modules

from core.emit import CSV, FORMATS, JSON, render_csv, render_json
from core.exceptions import ParameterOutOfRange, UnknownFlag
from core.seeding import check_seed

logger = logging.getLogger(__name__)

GROUPS: Dict[str, Tuple[str, Callable]] = {}
CONFIG_KEYS = ("group", "action", "handler", "seed", "jobs", "emit", "tol")


class UsageParser(CommandParser):
    """Parser whose usage errors exit with status 2

    From a shell argparse prints the usage and exits; called in-process the
    error is raised as a CommandError carrying the status.
    """

    def error(self, message):
        message = str(UnknownFlag(message))
        if self.called_from_command_line:
            argparse.ArgumentParser.error(self, message)
        raise CommandError(message, returncode=2)


def command_group(name: str, help: str):
    """Register `register(group)` as the builder of `ordlab <name> ...`"""
    def decorator(register: Callable) -> Callable:
        GROUPS[name] = (help, register)
        return register
    return decorator


def add_action(group, name: str, handler: Callable, help: str):
    """Leaf subcommand carrying the shared run flags"""
    parser = group.add_parser(name, help=help, description=help)
    parser.add_argument("--seed", type=int, default=None,
                        help="64-bit seed of every random stream")
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker threads (default: ORDLAB_JOBS)")
    parser.add_argument("--emit", choices=FORMATS, default=JSON)
    parser.add_argument("--tol", type=float, default=None,
                        help="override the tolerance of the check")
    parser.set_defaults(handler=handler)
    return parser


def build_parser(parser) -> None:
    autodiscover_modules("cli")
    parser_class = partial(
        UsageParser,
        called_from_command_line=getattr(parser, "called_from_command_line",
                                         None)
    )
    groups = parser.add_subparsers(dest="group", metavar="group",
                                   parser_class=parser_class)
    groups.required = True
    for name, (help, register) in GROUPS.items():
        group_parser = groups.add_parser(name, help=help, description=help)
        actions = group_parser.add_subparsers(dest="action", metavar="action",
                                              parser_class=parser_class)
        actions.required = True
        register(actions)


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: which handler, the run flags and the
    subcommand's own options"""
    group: str
    action: str
    handler: Callable[["RunConfig"], Any]
    seed: int = 0
    jobs: int = 1
    emit: str = JSON
    tol: Optional[float] = None
    options: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        check_seed(self.seed)
        if self.jobs < 1:
            raise ParameterOutOfRange(f"jobs {self.jobs} must be positive")
        if self.tol is not None and not self.tol > 0:
            raise ParameterOutOfRange(f"tol {self.tol} must be positive")

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> "RunConfig":
        seed = options.get("seed")
        jobs = options.get("jobs")
        return cls(
            group=options["group"],
            action=options["action"],
            handler=options["handler"],
            seed=settings.ORDLAB_SEED if seed is None else seed,
            jobs=settings.ORDLAB_JOBS if jobs is None else jobs,
            emit=options.get("emit") or JSON,
            tol=options.get("tol"),
            options={
                key: value for key, value in options.items()
                if key not in CONFIG_KEYS
            },
        )

    def tolerance(self, default: float) -> float:
        return default if self.tol is None else self.tol


def parse_cli(argv: List[str]) -> RunConfig:
    """RunConfig of `ordlab <argv>`; usage errors raise CommandError"""
    parser = UsageParser(prog="ordlab")
    build_parser(parser)
    return RunConfig.from_options(vars(parser.parse_args(argv)))


def run(config: RunConfig) -> str:
    """Output text of the command; domain errors propagate"""
    logger.debug("ordlab %s %s, seed %s", config.group, config.action,
                 config.seed)
    result = config.handler(config)
    if config.emit == CSV:
        return render_csv(result)
    return render_json(result, config.seed, settings.ORDLAB_VERSION)
