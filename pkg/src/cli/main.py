#!/usr/bin/env python3
"""
Main CLI interface for SIMPREF
"""

import logging
import sys

import click

from .. import __version__
from ..config import LOG_LEVELS, load_config
from .commands.bound import bound
from .commands.experiments import coth, search, sharpness
from .commands.integrate import integrate
from .commands.verify import verify

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@click.group()
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help='Logging verbosity on stderr (default: SIMPREF_LOG_LEVEL or WARNING)')
@click.version_option(version=__version__, prog_name='simpref')
@click.pass_context
def cli(ctx, log_level):
    """
    SIMPREF - certified Simpson quadrature

    Integrates expressions with guaranteed error enclosures, lists the refined
    Simpson error bounds for C1 to C4 integrands, and runs the verification
    suites and sharpness experiments behind those bounds.
    """
    cfg = load_config()
    ctx.ensure_object(dict)
    ctx.obj['config'] = cfg
    level = (log_level or cfg.log_level).upper()
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger('src').setLevel(getattr(logging, level))


# Add subcommands
cli.add_command(integrate)
cli.add_command(bound)
cli.add_command(verify)
cli.add_command(sharpness)
cli.add_command(coth)
cli.add_command(search)


if __name__ == '__main__':
    cli()
