#!/usr/bin/env python3
"""
Shared option handling and report emission for CLI commands
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

import click

from ...config import Config, OUTPUT_FORMATS, SMOOTHNESS_CLASSES
from ...errors import SimprefError
from ...reporting import ReportFormatter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_CAP = 3

Rows = Optional[List[Dict[str, Any]]]


def get_config(ctx: click.Context) -> Config:
    """Configuration built by the group for this invocation"""
    ctx.ensure_object(dict)
    cfg = ctx.obj.get('config')
    if cfg is None:
        cfg = Config()
        ctx.obj['config'] = cfg
    return cfg


def format_option(func):
    return click.option('--format', 'output_format', type=click.Choice(OUTPUT_FORMATS),
                        default=None, help='Output format (default: SIMPREF_FORMAT or json)')(func)


def interval_options(func):
    func = click.option('--b', 'b', type=float, required=True, help='Right end of the interval')(func)
    func = click.option('--a', 'a', type=float, required=True, help='Left end of the interval')(func)
    func = click.option('--expr', 'expr', required=True, help='Integrand in the variable t, e.g. "cosh(t)"')(func)
    return func


def class_option(func):
    return click.option('--class', 'smoothness', type=click.Choice(SMOOTHNESS_CLASSES, case_sensitive=False),
                        default=None, help='Smoothness class (default: SIMPREF_CLASS or c2)')(func)


def range_options(func):
    func = click.option('--inflation', type=float, default=None,
                        help='Widening factor for sampled derivative ranges (>= 1)')(func)
    func = click.option('--samples', type=int, default=None, help='Range estimation grid size')(func)
    func = click.option('--M', 'upper_range', type=float, default=None,
                        help='User-supplied maximum of the class derivative (requires --m)')(func)
    func = click.option('--m', 'lower_range', type=float, default=None,
                        help='User-supplied minimum of the class derivative (requires --M)')(func)
    return func


def check_interval(a: float, b: float) -> None:
    if not a < b:
        raise click.BadParameter(f"interval requires a < b, got a={a}, b={b}", param_hint="'--a'/'--b'")


def check_range_flags(lower: Optional[float], upper: Optional[float], inflation: Optional[float],
                      samples: Optional[int]) -> None:
    if (lower is None) != (upper is None):
        raise click.UsageError("--m and --M must be given together")
    if lower is not None and lower > upper:
        raise click.BadParameter(f"m must not exceed M, got m={lower}, M={upper}", param_hint="'--m'")
    if inflation is not None and inflation < 1.0:
        raise click.BadParameter(f"must be >= 1, got {inflation}", param_hint="'--inflation'")
    if samples is not None and samples < 3:
        raise click.BadParameter(f"must be >= 3, got {samples}", param_hint="'--samples'")


def emit(ctx: click.Context, command: str, output_format: Optional[str],
         body: Callable[[], Tuple[Dict[str, Any], Rows]]) -> None:
    """
    Run a command body, print its report and exit with the report's code.

    Evaluation problems (parse, domain, convergence, bound violations) become a
    report with exit code 1; click usage errors propagate (exit 2).
    """
    cfg = get_config(ctx)
    formatter = ReportFormatter(output_format or cfg.output_format)
    try:
        report, rows = body()
        text = formatter.render(report, rows)
    except (SimprefError, ValueError) as exc:
        logger.error(f"{command} failed: {exc}")
        report = {'command': command, 'error': str(exc), 'exit': EXIT_DOMAIN}
        text = formatter.render(report)

    click.echo(text)
    ctx.exit(report['exit'])
