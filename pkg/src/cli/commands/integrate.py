#!/usr/bin/env python3
"""
Integration CLI command
"""

import logging

import click

from ...analysis import (
    SMOOTHNESS_ORDER, DerivativeRange, Interval, adaptive_integrate, composite_integrate,
    parse_smoothness,
)
from ...config import RULES
from ...expr import parse
from .common import (
    EXIT_CAP, EXIT_OK, check_interval, check_range_flags, class_option, emit, format_option,
    get_config, interval_options, range_options,
)

logger = logging.getLogger(__name__)


def _user_ranges(I: Interval, smoothness: str, lower, upper):
    if lower is None:
        return None
    order = SMOOTHNESS_ORDER[smoothness]
    return {order: DerivativeRange.exact(I, order, lower, upper)}


@click.command()
@interval_options
@class_option
@click.option('--rule', type=click.Choice(RULES, case_sensitive=False), default=None,
              help='Simpson rule (default: SIMPREF_RULE or classical)')
@click.option('--tol', type=float, default=None, help='Target enclosure width (default: SIMPREF_TOL or 1e-8)')
@click.option('--max-panels', type=int, default=None, help='Adaptive panel cap (default: 65536)')
@click.option('--panels', type=int, default=None, help='Use N uniform panels instead of adaptive bisection')
@click.option('--reuse-global-ranges', is_flag=True, help='Estimate derivative ranges once over [a, b]')
@range_options
@click.option('--threads', type=int, default=None, help='Worker threads (default: SIMPREF_THREADS or 1)')
@format_option
@click.pass_context
def integrate(ctx, expr, a, b, smoothness, rule, tol, max_panels, panels, reuse_global_ranges,
              lower_range, upper_range, samples, inflation, threads, output_format):
    """
    Integrate an expression with a certified enclosure of the integral.

    Examples:
        # Corrected rule on a quartic (exact)
        python -m src.cli integrate --expr "t^4" --a 0 --b 1 --rule corrected --class c4

        # Adaptive classical rule to width 1e-8
        python -m src.cli integrate --expr "cosh(t)" --a -2 --b 2 --tol 1e-8

        # Eight uniform panels with known second-derivative range
        python -m src.cli integrate --expr "t^2" --a 0 --b 1 --panels 8 --m 2 --M 2
    """
    cfg = get_config(ctx)
    check_interval(a, b)
    check_range_flags(lower_range, upper_range, inflation, samples)
    tol = cfg.tolerance if tol is None else tol
    max_panels = cfg.max_panels if max_panels is None else max_panels
    if not tol > 0:
        raise click.BadParameter(f"must be positive, got {tol}", param_hint="'--tol'")
    if max_panels < 1:
        raise click.BadParameter(f"must be >= 1, got {max_panels}", param_hint="'--max-panels'")
    if panels is not None and panels < 1:
        raise click.BadParameter(f"must be >= 1, got {panels}", param_hint="'--panels'")

    smoothness = parse_smoothness(smoothness or cfg.smoothness)
    rule = (rule or cfg.rule).lower()
    threads = cfg.threads if threads is None else threads
    samples = cfg.range_samples if samples is None else samples
    inflation = cfg.inflation if inflation is None else inflation

    def body():
        e = parse(expr)
        I = Interval(a, b)
        ranges = _user_ranges(I, smoothness, lower_range, upper_range)
        options = dict(rule=rule, smoothness=smoothness, reuse_global_ranges=reuse_global_ranges,
                       ranges=ranges, inflation=inflation, samples=samples, threads=threads)
        if panels is not None:
            result = composite_integrate(e, I, panels, **options)
        else:
            result = adaptive_integrate(e, I, tol=tol, max_panels=max_panels, **options)

        code = EXIT_OK if result.converged else EXIT_CAP
        logger.info(f"integrate {expr} on [{a}, {b}]: {result.panels} panels, exit {code}")
        report = {
            'command': 'integrate',
            'estimate': result.estimate,
            'enclosure': result.enclosure.to_dict(),
            'panels': result.panels,
            'rule': result.rule,
            'class': smoothness,
            'converged': result.converged,
            'exit': code,
        }
        rows = [
            {
                'left': p.left, 'right': p.right, 'estimate': p.estimate,
                'lower': p.enclosure.lower, 'upper': p.enclosure.upper,
                'theorem': p.enclosure.theorem, 'confidence': p.enclosure.confidence,
            }
            for p in result.partition.panels
        ]
        return report, rows

    emit(ctx, 'integrate', output_format, body)
