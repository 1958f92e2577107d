#!/usr/bin/env python3
"""
Utility functions for the slpgram CLI.

Human-facing messages go to a rich console on stderr; grammars, reports and
decompressed text go to stdout or ``--output`` untouched.
"""

import sys
from pathlib import Path
from typing import NoReturn, Optional, Union

import click

# Try to import rich for enhanced console output
try:
    from rich.console import Console

    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False

from slpgram.core.errors import InvariantError, LimitExceededError, SlpFormatError, SlpgramError
from slpgram.core.slp import Slp, parse_slp
from slpgram.decorators.error_handling import log_errors

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


class SimpleConsole:
    """Fallback console printing plain text to stderr."""

    def print(self, *args, **kwargs):
        import re

        text = args[0] if args else ""
        if isinstance(text, str):
            text = re.sub(r"\[/?[a-z ]+\]", "", text)
        click.echo(text, err=True)


# Singleton console instance
_console = None


def get_console():
    """
    Get a console instance for messages.

    Returns:
        Console instance writing to stderr (rich if available)
    """
    global _console

    if _console is None:
        _console = Console(stderr=True, highlight=False) if RICH_AVAILABLE else SimpleConsole()
    return _console


def read_bytes(path: str) -> bytes:
    """Read a whole file, ``-`` meaning standard input."""
    if path == "-":
        return click.get_binary_stream("stdin").read()
    return Path(path).read_bytes()


@log_errors(log_level="DEBUG", include_traceback=False)
def load_slp(path: str) -> Slp:
    """
    Read and parse an SLP file.

    Raises:
        SlpFormatError: with the file name and line of the first problem.
    """
    try:
        return parse_slp(read_bytes(path))
    except SlpFormatError as e:
        raise e.with_path(path) from None


def write_output(data: Union[bytes, str], output: Optional[str]) -> None:
    """Write machine-readable output to ``output`` or stdout."""
    payload = data.encode("latin-1") if isinstance(data, str) else data
    if output is None or output == "-":
        stream = click.get_binary_stream("stdout")
        stream.write(payload)
        stream.flush()
    else:
        Path(output).write_bytes(payload)


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, InvariantError):
        return EXIT_MISMATCH
    if isinstance(error, LimitExceededError):
        return EXIT_LIMIT
    if isinstance(error, (SlpgramError, OSError, ValueError)):
        return EXIT_INPUT
    return EXIT_MISMATCH


def fail(error: BaseException, logger) -> NoReturn:
    """Report ``error`` on the console and exit with its code."""
    code = exit_code_for(error)
    if code == EXIT_MISMATCH:
        logger.exception(f"Unexpected error: {error}")
    else:
        logger.debug(f"Command failed: {error}")
    get_console().print(f"[red]Error: {error}[/red]")
    sys.exit(code)
