#!/usr/bin/env python3
"""
Verification CLI command
"""

import click

from ...services import SUITES, VerificationService
from .common import EXIT_DOMAIN, EXIT_OK, emit, format_option, get_config


@click.command()
@click.option('--suite', type=click.Choice(SUITES + ['all']), default='all', help='Property suite to run')
@click.option('--seed', type=int, default=None, help='Random seed (default: SIMPREF_SEED or 0)')
@click.option('--intervals', type=int, default=None, help='Random intervals per corpus function')
@click.option('--trials', type=int, default=None, help='Constant search trials in the sharpness suite')
@format_option
@click.pass_context
def verify(ctx, suite, seed, intervals, trials, output_format):
    """
    Run verification suites; exit 0 only if every property passes.

    Examples:
        # Everything, reproducibly
        python -m src.cli verify --suite all --seed 42

        # Only the coth application, as CSV
        python -m src.cli verify --suite coth --format csv
    """
    cfg = get_config(ctx)
    if intervals is not None and intervals < 1:
        raise click.BadParameter(f"must be >= 1, got {intervals}", param_hint="'--intervals'")
    if trials is not None and trials < 1:
        raise click.BadParameter(f"must be >= 1, got {trials}", param_hint="'--trials'")

    def body():
        service = VerificationService(
            seed=cfg.seed if seed is None else seed,
            threads=cfg.threads,
            intervals=cfg.verify_intervals if intervals is None else intervals,
            search_trials=cfg.search_trials if trials is None else trials,
        )
        properties = [p.to_dict() for p in service.run(suite)]
        code = EXIT_OK if all(p['pass'] for p in properties) else EXIT_DOMAIN
        report = {'command': 'verify', 'properties': properties, 'exit': code}
        return report, properties

    emit(ctx, 'verify', output_format, body)
