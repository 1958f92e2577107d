#!/usr/bin/env python3
"""
Command-line interface for slpgram.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 resource limit exceeded.
"""

import click

from slpgram.cli.commands.count_commands import count, verify
from slpgram.cli.commands.grammar_commands import build, decompress, info
from slpgram.config.env_loader import load_env
from slpgram.config.settings import LOG_LEVELS, get_settings, reset_settings
from slpgram.core.logger import setup_logging


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Log level for messages on stderr (default: SLPGRAM_LOG_LEVEL)",
)
@click.option("--env-file", default=None, help="Extra .env file to load")
def cli(log_level, env_file):
    """slpgram - non-overlapping q-gram frequencies of SLP-compressed texts."""
    load_env(env_file, verbose=False)
    reset_settings()
    setup_logging("slpgram", level=log_level or get_settings().log_level)


# Grammar commands
cli.add_command(build)
cli.add_command(info)
cli.add_command(decompress)

# Counting commands
cli.add_command(count)
cli.add_command(verify)


def main():
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
