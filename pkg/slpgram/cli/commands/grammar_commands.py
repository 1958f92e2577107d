#!/usr/bin/env python3
"""
Grammar commands for the slpgram CLI: build, info and decompress.
"""

import click

from slpgram.cli.utils import fail, load_slp, read_bytes, write_output
from slpgram.config.settings import get_settings
from slpgram.core.builders import BUILDERS
from slpgram.core.logger import get_logger
from slpgram.core.slp import compute_meta, expand, reachable_variables, serialize_slp
from slpgram.utils.context import LogContext


@click.command()
@click.option("--input", "input_path", required=True, help="File with the raw text ('-' for stdin)")
@click.option(
    "--method",
    type=click.Choice(sorted(BUILDERS)),
    default=None,
    help="Construction method (default: SLPGRAM_BUILD_METHOD)",
)
@click.option("--output", default=None, help="Where to write the SLP (default: stdout)")
def build(input_path, method, output):
    """Build an SLP for a file."""
    logger = get_logger("slpgram.cli")
    method = method or get_settings().build_method

    with LogContext(command="build", method=method):
        try:
            data = read_bytes(input_path)
            if not data:
                raise ValueError(f"{input_path}: input is empty")
            slp = BUILDERS[method](data)
            write_output(serialize_slp(slp), output)
            logger.info(f"built {slp.n} rules for {len(data)} bytes with {method}")
        except Exception as e:
            fail(e, logger)


@click.command()
@click.option("--input", "input_path", required=True, help="SLP file ('-' for stdin)")
def info(input_path):
    """Show the size and shape of an SLP."""
    logger = get_logger("slpgram.cli")

    with LogContext(command="info"):
        try:
            slp = load_slp(input_path)
            meta = compute_meta(slp, 1)
            reachable = reachable_variables(slp)
            max_vocc = max(meta[i].vocc for i in meta.variables())
            click.echo(f"n={slp.n} root={slp.root} length={slp.length()}")
            click.echo(f"max_vocc={max_vocc} unreachable={slp.n - len(reachable)}")
        except Exception as e:
            fail(e, logger)


@click.command()
@click.option("--input", "input_path", required=True, help="SLP file ('-' for stdin)")
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Largest text to expand, in bytes")
@click.option("--output", default=None, help="Where to write the text (default: stdout)")
def decompress(input_path, limit, output):
    """Expand an SLP back into its text."""
    logger = get_logger("slpgram.cli")
    limit = limit or get_settings().expand_limit

    with LogContext(command="decompress"):
        try:
            slp = load_slp(input_path)
            write_output(bytes(expand(slp, limit)), output)
        except Exception as e:
            fail(e, logger)
