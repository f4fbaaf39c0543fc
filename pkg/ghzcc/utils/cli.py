"""Shared pieces of the command-line surface."""

from contextlib import contextmanager
from typing import Iterable

import click

from ghzcc import LOGGER
from ghzcc.config import ConfigurationError
from ghzcc.game.errors import GameError


class InvalidInput(click.ClickException):
    """Bad flags or parameters; nothing has been computed"""

    exit_code = 1


class CheckFailed(click.ClickException):
    """A computed value disagrees with what it must be"""

    exit_code = 2

    def __init__(self, message: str, failures: Iterable[str] = ()):
        listing = "".join(f"\n  - {failure}" for failure in failures)
        super().__init__(message + listing)


@contextmanager
def validating():
    """Turn configuration and library errors into exit status 1"""
    try:
        yield
    except (ConfigurationError, GameError) as e:
        LOGGER.error(f"Invalid input: {e}")
        raise InvalidInput(str(e))


def output_options(func):
    """--format, --output and --threads, shared by every subcommand"""
    func = click.option(
        "--threads",
        type=int,
        default=None,
        help="Worker threads; never changes the output.",
    )(func)
    func = click.option(
        "--output",
        "output_path",
        default=None,
        help="Write the report to this file instead of standard output.",
    )(func)
    func = click.option(
        "--format",
        "output_format",
        default=None,
        help="csv, json or pretty.",
    )(func)
    return func
