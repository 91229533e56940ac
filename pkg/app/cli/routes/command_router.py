from argparse import ArgumentParser, Namespace, _SubParsersAction
from typing import Any, Callable, NamedTuple

from cli.schemas.report import Report

Handler = Callable[[Namespace], Report]


class Argument(NamedTuple):
    flags: tuple[str, ...]
    options: dict[str, Any]


def argument(*flags: str, **options: Any) -> Argument:
    return Argument(flags=flags, options=options)


class Command(NamedTuple):
    name: str
    help: str
    handler: Handler
    arguments: tuple[Argument, ...]


class CommandRouter:
    """Collects subcommand handlers the way an API router collects endpoints."""

    def __init__(self, tag: str) -> None:
        self.tag = tag
        self.commands: list[Command] = []

    def command(self, name: str, help: str, *arguments: Argument) -> Callable[[Handler], Handler]:
        def decorator(handler: Handler) -> Handler:
            self.commands.append(Command(name=name, help=help, handler=handler, arguments=arguments))
            return handler

        return decorator

    def include_in(self, subparsers: _SubParsersAction, parents: list[ArgumentParser]) -> None:
        for command in self.commands:
            parser = subparsers.add_parser(
                command.name,
                help=command.help,
                description=f"[{self.tag}] {command.help}",
                parents=parents,
            )
            for arg in command.arguments:
                parser.add_argument(*arg.flags, **arg.options)
            parser.set_defaults(handler=command.handler, command=command.name)
