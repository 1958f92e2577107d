#!/usr/bin/env python3
"""
Counting commands for the slpgram CLI: count and verify.
"""

import sys

import click

from slpgram.cli.utils import EXIT_MISMATCH, fail, get_console, load_slp, write_output
from slpgram.config.settings import get_settings
from slpgram.core.logger import get_logger
from slpgram.core.oracle import oracle_count
from slpgram.core.pipeline import count_qgrams
from slpgram.core.report import diff_reports, first_difference, format_gram, format_report
from slpgram.utils.context import LogContext

# Get console instance
console = get_console()


@click.command()
@click.option("--input", "input_path", required=True, help="SLP file ('-' for stdin)")
@click.option("--q", "q", type=click.IntRange(min=1), required=True, help="Gram length")
@click.option("--output", default=None, help="Where to write the TSV report (default: stdout)")
def count(input_path, q, output):
    """Count non-overlapping q-gram frequencies without decompressing."""
    logger = get_logger("slpgram.cli")

    with LogContext(command="count", q=q):
        try:
            slp = load_slp(input_path)
            report = count_qgrams(slp, q)
            write_output(format_report(report), output)
            logger.info(f"{len(report)} distinct {q}-grams")
        except Exception as e:
            fail(e, logger)


@click.command()
@click.option("--input", "input_path", required=True, help="SLP file ('-' for stdin)")
@click.option("--q", "q", type=click.IntRange(min=1), required=True, help="Gram length")
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Largest text the oracle may expand")
@click.option("--corrupt", is_flag=True, hidden=True, help="Perturb one claimed weight")
def verify(input_path, q, limit, corrupt):
    """Compare the compressed-domain count with the decompressing oracle."""
    logger = get_logger("slpgram.cli")
    limit = limit or get_settings().expand_limit

    with LogContext(command="verify", q=q):
        try:
            slp = load_slp(input_path)
            expected = oracle_count(slp, q, limit)
            actual = count_qgrams(slp, q, corrupt=corrupt)
        except Exception as e:
            fail(e, logger)

        diff = diff_reports(expected, actual)
        if not diff:
            click.echo("identical")
            return
        click.echo("".join(diff), nl=False)
        gram = first_difference(expected, actual)
        console.print(f"[red]Reports differ, first at gram {format_gram(gram)}[/red]")
        logger.warning(f"verification failed at gram {format_gram(gram)}")
        sys.exit(EXIT_MISMATCH)
