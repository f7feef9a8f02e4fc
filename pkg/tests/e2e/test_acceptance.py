"""
End-to-end acceptance checks over the full library and CLI
"""
import json
import math

import numpy as np
import pytest

from src.analysis import (
    DerivativeRange, Witness, closed_form_sharpness, coth, coth_mean_bounds,
    coth_mean_corrected, composite_integrate, constant_search, corrected_t_functional,
    eq11_pointwise, hh_enclosure, hh_refined_enclosure, sharpness_ratio, t_functional,
)
from src.cli.main import cli
from src.expr import parse
from src.services import VerificationService
from tests.fixtures.reference_values import COTH_PAIRS

CORPUS_INTERVALS = 20


class TestConclusionIdentities:
    """Quartic and quintic defects and the corrected rule"""

    def test_identities(self, unit_interval):
        assert t_functional(parse('t^4'), unit_interval) == pytest.approx(1.0 / 120.0, abs=1e-12)
        assert t_functional(parse('t^5'), unit_interval) == pytest.approx(1.0 / 48.0, abs=1e-12)
        for source in ('t^4', 't^5'):
            assert corrected_t_functional(parse(source), unit_interval) == pytest.approx(0.0, abs=1e-12)


class TestCorpusProperties:
    """Representations and bound containment over the smooth corpus"""

    @pytest.fixture(scope='class')
    def corpus_service(self):
        return VerificationService(seed=42, threads=4, intervals=CORPUS_INTERVALS, search_trials=50)

    def test_representations(self, corpus_service):
        results = [r for r in corpus_service.verify_representations() if r.name.startswith('representation')]
        assert len(results) == 3
        assert all(r.passed for r in results), [(r.name, r.slack) for r in results]

    def test_bound_containment(self, corpus_service):
        results = corpus_service.verify_bounds()
        failed = [(r.name, r.slack) for r in results if not r.passed]
        assert failed == []
        names = {r.name for r in results}
        for tag in ('THM0', 'THM1', 'EQ7', 'THM2', 'EQ4', 'THM3', 'THM4'):
            assert f"containment_{tag}" in names


class TestSharpness:
    """The 1/1152 witness and the C2 constant bracket"""

    @pytest.mark.parametrize('a', [2.0, 10.0, 100.0])
    def test_d_function(self, a):
        assert sharpness_ratio(Witness.D_FUNCTION, a) == pytest.approx(closed_form_sharpness(a), rel=1e-10)

    def test_d_function_limit(self):
        ratio = sharpness_ratio(Witness.D_FUNCTION, 1000.0)
        assert (1.0 - 3e-6) / 1152.0 <= ratio <= 1.0 / 1152.0

    def test_c2_bracket(self):
        report = constant_search('C2', seed=42, trials=200, threads=4)
        assert 1.0 / 288.0 - 1e-12 <= report.best_ratio <= 1.0 / 162.0 + 1e-10


class TestHermiteHadamardRefinement:
    """Refined bracket for exp on [0, 1]"""

    def test_refined_bracket(self, exp_expr, unit_interval):
        refined = hh_refined_enclosure(exp_expr, unit_interval, DerivativeRange.exact(unit_interval, 2, 1.0, math.e))
        plain = hh_enclosure(exp_expr, unit_interval)
        assert refined.contains(math.e - 1.0)
        assert refined.width / plain.width < 1.0


class TestCothApplication:
    """Pointwise and integrated coth brackets"""

    def test_pointwise(self):
        t = np.logspace(-3.0, 1.0, 1000)
        lower, upper = eq11_pointwise(t)
        values = coth(t) / t
        assert float(np.min(values - lower)) >= -1e-12
        assert float(np.min(upper - values)) >= -1e-12

    @pytest.mark.parametrize('y, x', COTH_PAIRS)
    def test_integrated(self, y, x, coth_reference):
        mean = coth_reference[(y, x)]
        assert coth_mean_bounds(y, x).contains(mean)
        disc = coth_mean_corrected(y, x)
        assert abs(mean - disc.corrected) <= disc.corrected_radius


class TestCompositeDecay:
    """Enclosure widths under uniform refinement with global ranges"""

    @pytest.mark.parametrize('smoothness, k, bound', [('C2', 2, 'THM1'), ('C3', 3, 'THM2')])
    def test_decay(self, exp_expr, unit_interval, smoothness, k, bound):
        ranges = {k: DerivativeRange.exact(unit_interval, k, 1.0, math.e)}
        single = composite_integrate(exp_expr, unit_interval, 1, smoothness=smoothness, ranges=ranges)
        assert single.enclosure.theorem == bound
        for n in (2, 4, 8, 16):
            result = composite_integrate(exp_expr, unit_interval, n, smoothness=smoothness, ranges=ranges)
            assert result.integral_width == pytest.approx(single.integral_width / n ** k, rel=1e-12)
            assert result.defect_width == pytest.approx(single.defect_width / n ** (k - 1), rel=1e-12)


class TestDeterminism:
    """verify --suite all is byte-identical across runs and thread counts"""

    def test_verify_all(self, cli_runner):
        args = ['verify', '--suite', 'all', '--seed', '42']
        first = cli_runner.invoke(cli, args, env={'SIMPREF_THREADS': '1'})
        second = cli_runner.invoke(cli, args, env={'SIMPREF_THREADS': '1'})
        threaded = cli_runner.invoke(cli, args, env={'SIMPREF_THREADS': '4'})

        assert first.exit_code == 0, first.stdout
        assert first.stdout == second.stdout == threaded.stdout
        report = json.loads(first.stdout)
        assert report['exit'] == 0
        assert all(p['pass'] for p in report['properties'])
