#!/usr/bin/env python3
"""
Error-bound CLI command
"""

import click

from ...analysis import (
    SMOOTHNESS_ORDER, DerivativeRange, Interval, applicable_bounds, estimate_derivative_range,
    parse_smoothness, quartic_shift_enclosure, select_best, simpson_mean,
)
from ...expr import parse
from .common import (
    EXIT_OK, check_interval, check_range_flags, class_option, emit, format_option, get_config,
    interval_options, range_options,
)


@click.command()
@interval_options
@class_option
@range_options
@click.option('--include-corrected', is_flag=True, help='Let the corrected-rule bound compete for class c4')
@format_option
@click.pass_context
def bound(ctx, expr, a, b, smoothness, lower_range, upper_range, samples, inflation,
          include_corrected, output_format):
    """
    List every applicable enclosure of the Simpson defect and the narrowest one.

    Examples:
        # C2 bounds for exp on [0, 1]
        python -m src.cli bound --expr "exp(t)" --a 0 --b 1 --class c2

        # Convex second derivative
        python -m src.cli bound --expr "t^3" --a 0 --b 1 --class c4-convex2
    """
    cfg = get_config(ctx)
    check_interval(a, b)
    check_range_flags(lower_range, upper_range, inflation, samples)
    smoothness = parse_smoothness(smoothness or cfg.smoothness)
    samples = cfg.range_samples if samples is None else samples
    inflation = cfg.inflation if inflation is None else inflation

    def body():
        e = parse(expr)
        I = Interval(a, b)
        order = SMOOTHNESS_ORDER[smoothness]
        if lower_range is None:
            r = estimate_derivative_range(e, I, order, samples)
        else:
            r = DerivativeRange.exact(I, order, lower_range, upper_range)

        candidates = applicable_bounds(e, I, smoothness, ranges={order: r}, inflation=inflation,
                                       samples=samples, include_corrected=include_corrected)
        winner = select_best(candidates)
        listed = list(candidates)
        if order == 4:
            listed.append(quartic_shift_enclosure(e, I, r, inflation))

        report = {
            'command': 'bound',
            'enclosure': winner.to_dict(),
            'candidates': [c.to_dict() for c in listed],
            'simpson_mean': simpson_mean(e, I),
            'range': {'order': r.order, 'm': r.m, 'M': r.M, 'refined': r.refined},
            'class': smoothness,
            'exit': EXIT_OK,
        }
        rows = [dict(c.to_dict(), constant=c.constant, width=c.width) for c in listed]
        return report, rows

    emit(ctx, 'bound', output_format, body)
