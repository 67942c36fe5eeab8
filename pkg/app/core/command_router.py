"""Decorator-based command registration on top of argparse.

Each service declares its commands on its own ``CommandRouter`` and
``main.py`` includes them all into one ``CommandApp``, the way web routers
are included into an application.
"""
import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from app.services.rings.rings_schema import RingId


@dataclass(frozen=True)
class Argument:
    """Positional args and keyword args passed straight to ``add_argument``."""
    flags: Sequence[str]
    options: Dict[str, Any] = field(default_factory=dict)


def argument(*flags: str, **options: Any) -> Argument:
    return Argument(flags, options)


@dataclass
class CommandContext:
    """Global flags, already parsed and validated."""
    ring: RingId
    window: int
    output: str = "text"
    with_oracle: bool = False
    workers: int = 1


@dataclass
class Command:
    name: str
    handler: Callable[..., Any]
    help: str
    arguments: List[Argument]
    aliases: List[str] = field(default_factory=list)


class CommandRouter:
    def __init__(self, tags: Optional[List[str]] = None):
        self.tags = tags or []
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "", arguments: Sequence[Argument] = (), aliases: Sequence[str] = ()):
        def decorator(handler: Callable[..., Any]) -> Callable[..., Any]:
            self.commands.append(Command(name, handler, help or (handler.__doc__ or "").strip(), list(arguments), list(aliases)))
            return handler
        return decorator


class CommandApp:
    def __init__(self, prog: str, description: str, global_arguments: Sequence[Argument] = ()):
        self.prog = prog
        self.description = description
        self.global_arguments = list(global_arguments)
        self.commands: Dict[str, Command] = {}

    def include_router(self, router: CommandRouter) -> None:
        for command in router.commands:
            if command.name in self.commands:
                raise ValueError(f"command {command.name!r} registered twice")
            self.commands[command.name] = command

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=self.prog, description=self.description)
        # global flags go after the command name
        shared = argparse.ArgumentParser(add_help=False)
        for arg in self.global_arguments:
            shared.add_argument(*arg.flags, **arg.options)

        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        for command in self.commands.values():
            sub = subparsers.add_parser(command.name, help=command.help, aliases=command.aliases, parents=[shared])
            sub.set_defaults(_command=command.name)
            for arg in command.arguments:
                sub.add_argument(*arg.flags, **arg.options)
        return parser

    def command_arguments(self, name: str, namespace: argparse.Namespace) -> Dict[str, Any]:
        """The parsed values of the command's own arguments, keyed by dest."""
        values = {}
        for arg in self.commands[name].arguments:
            long_flags = [f for f in arg.flags if f.startswith("--")]
            dest = arg.options.get("dest") or (long_flags or arg.flags)[0].lstrip("-").replace("-", "_")
            values[dest] = getattr(namespace, dest)
        return values
