#!/usr/bin/env python3
"""
Experiment CLI commands: witness sharpness, coth application, constant search
"""

import click

from ...analysis import (
    Witness, closed_form_sharpness, coth_mean_bounds, coth_mean_corrected, coth_mean_oracle,
    constant_search, sharpness_ratio,
)
from ...constants import A_INTERVAL, EQ4, THEOREM_CONSTANTS, THM1, THM2
from .common import EXIT_OK, emit, format_option, get_config

WITNESS_CHOICES = [w.value for w in Witness]

# Constant each witness is measured against
_WITNESS_BOUND = {
    Witness.ABS_CUBIC: THM1,
    Witness.D_FUNCTION: THM2,
    Witness.X4: EQ4,
    Witness.X5: EQ4,
}


@click.command()
@click.option('--witness', type=click.Choice(WITNESS_CHOICES, case_sensitive=False), required=True,
              help='Witness function')
@click.option('--param', type=float, required=True,
              help='Half-width a of [-a, a] (right end of [0, a] for x4/x5)')
@click.option('--method', type=click.Choice(['analytic', 'oracle']), default='analytic',
              help='How the Simpson defect of the witness is computed')
@format_option
@click.pass_context
def sharpness(ctx, witness, param, method, output_format):
    """
    Ratio of a witness's Simpson defect to its bound.

    Examples:
        # Approaches 1/1152 as the parameter grows
        python -m src.cli sharpness --witness d --param 1000
    """
    w = Witness.parse(witness)
    if w is Witness.D_FUNCTION and not param > 1.0:
        raise click.BadParameter(f"must be > 1 for the d witness, got {param}", param_hint="'--param'")
    if not param > 0.0:
        raise click.BadParameter(f"must be positive, got {param}", param_hint="'--param'")

    def body():
        report = {
            'command': 'sharpness',
            'witness': w.value,
            'param': param,
            'method': method,
            'ratio': sharpness_ratio(w, param, method),
            'theorem': _WITNESS_BOUND[w],
            'constant': THEOREM_CONSTANTS[_WITNESS_BOUND[w]],
        }
        if w is Witness.D_FUNCTION:
            report['closed_form'] = closed_form_sharpness(param)
        elif w is Witness.ABS_CUBIC:
            # Best C2 constant lies in this bracket; the witness attains the lower end
            report['a_interval'] = [float(end) for end in A_INTERVAL]
        report['exit'] = EXIT_OK
        return report, None

    emit(ctx, 'sharpness', output_format, body)


@click.command()
@click.option('--y', 'y', type=float, required=True, help='Lower limit (> 0)')
@click.option('--x', 'x', type=float, required=True, help='Upper limit (> y)')
@click.option('--method', type=click.Choice(['thm5', 'thm6', 'oracle'], case_sensitive=False),
              default='thm5', help='Bracket, corrected estimate, or reference mean')
@format_option
@click.pass_context
def coth(ctx, y, x, method, output_format):
    """
    Mean of coth(t)/t over [y, x].

    Examples:
        # Two-sided bracket
        python -m src.cli coth --y 1 --x 2 --method thm5

        # Corrected estimate with error radius
        python -m src.cli coth --y 0.1 --x 0.2 --method thm6
    """
    if not y > 0.0:
        raise click.BadParameter(f"y must be > 0, got {y}", param_hint="'--y'")
    if not y < x:
        raise click.BadParameter(f"x must exceed y, got y={y}, x={x}", param_hint="'--x'")
    method = method.lower()

    def body():
        report = {'command': 'coth', 'y': y, 'x': x, 'method': method}
        if method == 'oracle':
            report['estimate'] = coth_mean_oracle(y, x)
        else:
            result = coth_mean_bounds(y, x) if method == 'thm5' else coth_mean_corrected(y, x)
            if result.corrected is not None:
                report['estimate'] = result.corrected
            report['enclosure'] = result.to_enclosure().to_dict()
        report['exit'] = EXIT_OK
        return report, None

    emit(ctx, 'coth', output_format, body)


@click.command()
@click.option('--class', 'smoothness', type=click.Choice(['c1', 'c2'], case_sensitive=False), default='c2',
              help='Smoothness class to search')
@click.option('--seed', type=int, default=None, help='Random seed (default: SIMPREF_SEED or 0)')
@click.option('--trials', type=int, default=None, help='Random candidates (default: SIMPREF_SEARCH_TRIALS or 200)')
@click.option('--no-seed-candidate', is_flag=True, help='Skip the |t|^3/6 candidate')
@format_option
@click.pass_context
def search(ctx, smoothness, seed, trials, no_seed_candidate, output_format):
    """
    Empirical search for the worst |T| / ((M_k - m_k)(b - a)^k) ratio.

    Examples:
        python -m src.cli search --class c2 --seed 42 --trials 500
    """
    cfg = get_config(ctx)
    if trials is not None and trials < 1:
        raise click.BadParameter(f"must be >= 1, got {trials}", param_hint="'--trials'")

    def body():
        result = constant_search(
            smoothness,
            seed=cfg.seed if seed is None else seed,
            trials=cfg.search_trials if trials is None else trials,
            include_seed=not no_seed_candidate,
            threads=cfg.threads,
        )
        report = dict({'command': 'search'}, **result.to_dict())
        report['exit'] = EXIT_OK
        return report, None

    emit(ctx, 'search', output_format, body)
