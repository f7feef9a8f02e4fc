"""
Unit tests for sharpness witnesses and the constant search
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from src.analysis import (
    Witness, closed_form_sharpness, constant_search, sharpness_ratio, witness_antiderivative,
    witness_eval, witness_range, witness_t_functional,
)
from src.analysis import extremal
from src.errors import BoundViolationError


def _d_defect(a: float) -> float:
    """Closed-form defect of the d witness on [-a, a], a > 1"""
    return a ** 3 / 72.0 - a / 36.0 + 1.0 / 36.0 - 1.0 / (120.0 * a)


class TestWitnessFunctions:
    """Test closed forms of the witnesses"""

    def test_parse_aliases(self):
        assert Witness.parse('d') is Witness.D_FUNCTION
        assert Witness.parse('ABS_CUBIC') is Witness.ABS_CUBIC
        assert Witness.parse('abs') is Witness.ABS_CUBIC
        with pytest.raises(ValueError):
            Witness.parse('x6')

    def test_d_function_third_derivative_is_clip(self):
        x = np.linspace(-3.0, 3.0, 61)
        np.testing.assert_array_equal(witness_eval(Witness.D_FUNCTION, x, 3), np.clip(x, -1.0, 1.0))

    @pytest.mark.parametrize('knot', [-1.0, 1.0])
    def test_d_function_continuous_at_knots(self, knot):
        for order in range(4):
            below = witness_eval(Witness.D_FUNCTION, math.nextafter(knot, -math.inf), order)
            above = witness_eval(Witness.D_FUNCTION, math.nextafter(knot, math.inf), order)
            assert above == pytest.approx(below, abs=1e-12)

    def test_order_beyond_smoothness_rejected(self):
        with pytest.raises(ValueError):
            witness_eval(Witness.ABS_CUBIC, 0.5, 3)

    @pytest.mark.parametrize('witness', list(Witness))
    def test_antiderivative_derivative(self, witness):
        x = np.array([-2.5, -1.0, -0.3, 0.4, 1.0, 1.7])
        h = 1e-5
        slope = (witness_antiderivative(witness, x + h) - witness_antiderivative(witness, x - h)) / (2.0 * h)
        np.testing.assert_allclose(slope, witness_eval(witness, x), rtol=1e-7, atol=1e-8)

    def test_ranges(self):
        assert witness_range(Witness.ABS_CUBIC, -1.0, 2.0) == (0.0, 2.0)
        assert witness_range(Witness.ABS_CUBIC, 0.5, 2.0) == (0.5, 2.0)
        assert witness_range(Witness.D_FUNCTION, -3.0, 0.5) == (-1.0, 0.5)
        assert witness_range(Witness.X5, 0.0, 1.0) == (0.0, 120.0)

    @pytest.mark.parametrize('a', [1.5, 2.0, 10.0])
    def test_d_defect_closed_form(self, a):
        assert witness_t_functional(Witness.D_FUNCTION, -a, a) == pytest.approx(_d_defect(a), rel=1e-12)

    def test_conclusion_values(self):
        assert witness_t_functional(Witness.X4, 0.0, 1.0) == pytest.approx(1.0 / 120.0, abs=1e-15)
        assert witness_t_functional(Witness.X5, 0.0, 1.0) == pytest.approx(1.0 / 48.0, abs=1e-15)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            witness_t_functional(Witness.X4, 0.0, 1.0, method='guess')


class TestSharpnessRatio:
    """Test witness ratios against their bound constants"""

    @pytest.mark.parametrize('a', [2.0, 10.0, 100.0])
    @pytest.mark.parametrize('method', ['analytic', 'oracle'])
    def test_d_function_matches_closed_form(self, a, method):
        assert sharpness_ratio(Witness.D_FUNCTION, a, method) == pytest.approx(closed_form_sharpness(a), rel=1e-10)

    def test_d_function_limit(self):
        ratio = sharpness_ratio(Witness.D_FUNCTION, 1000.0)
        assert (1.0 - 3e-6) / 1152.0 <= ratio <= 1.0 / 1152.0

    def test_abs_cubic_reaches_known_lower_end(self):
        assert sharpness_ratio(Witness.ABS_CUBIC, 1.0) == pytest.approx(1.0 / 288.0, rel=1e-12)

    def test_quartic_monomials(self):
        assert sharpness_ratio(Witness.X4, 1.0) == pytest.approx(1.0, rel=1e-12)
        assert sharpness_ratio(Witness.X5, 1.0) == pytest.approx(0.5, rel=1e-12)

    def test_parameter_domain(self):
        with pytest.raises(ValueError):
            sharpness_ratio(Witness.D_FUNCTION, 1.0)
        with pytest.raises(ValueError):
            sharpness_ratio(Witness.X4, 0.0)


class TestConstantSearch:
    """Test the randomized best-constant search"""

    def test_c2_bracket(self):
        report = constant_search('C2', seed=42, trials=40)
        assert 1.0 / 288.0 - 1e-12 <= report.best_ratio <= 1.0 / 162.0 + 1e-10
        assert report.trials == 40

    def test_c1_below_proven_constant(self):
        report = constant_search('c1', seed=7, trials=40)
        assert 0.0 < report.best_ratio <= 5.0 / 72.0 + 1e-10
        assert report.known_lower is None

    def test_deterministic_across_threads(self):
        serial = constant_search('C2', seed=3, trials=30, threads=1)
        parallel = constant_search('C2', seed=3, trials=30, threads=4)
        assert serial.to_dict() == parallel.to_dict()

    def test_report_schema(self):
        data = constant_search('C2', seed=0, trials=5).to_dict()
        assert list(data) == ['class', 'trials', 'best_ratio', 'paper_lower', 'paper_upper',
                              'candidate_description']
        assert data['paper_lower'] == pytest.approx(1.0 / 288.0)

    def test_counterexample_raises(self, monkeypatch):
        monkeypatch.setitem(extremal.SEARCH_BRACKETS, 'C2', (Fraction(1, 288), Fraction(1, 1000)))
        with pytest.raises(BoundViolationError):
            constant_search('C2', seed=0, trials=1)

    def test_unsupported_class(self):
        with pytest.raises(ValueError):
            constant_search('C3', trials=1)
