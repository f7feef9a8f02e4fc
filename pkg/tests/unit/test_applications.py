"""
Unit tests for the coth(t)/t application
"""
import math

import mpmath
import numpy as np
import pytest

from src.analysis import (
    CothBounds, coth, coth_mean_bounds, coth_mean_corrected, coth_mean_oracle, eq10_pointwise,
    eq11_corrected_pointwise, eq11_pointwise,
)
from src.errors import EvaluationDomainError
from tests.fixtures.reference_values import COTH_PAIRS


class TestCoth:
    """Test the coth evaluator across its three regimes"""

    @pytest.mark.parametrize('t', [1e-8, 1e-5, 0.3, 1.0, 7.5, 25.0, 400.0, -2.0])
    def test_matches_high_precision(self, t):
        with mpmath.workdps(40):
            expected = float(mpmath.coth(t))
        assert coth(t) == pytest.approx(expected, rel=1e-14)

    def test_vectorized(self):
        t = np.array([1e-6, 0.5, 30.0])
        np.testing.assert_allclose(coth(t), [coth(float(x)) for x in t], rtol=1e-14)

    def test_zero(self):
        with pytest.raises(EvaluationDomainError):
            coth(0.0)


class TestMeanBrackets:
    """Test the integrated brackets against the reference mean"""

    @pytest.mark.parametrize('y, x', COTH_PAIRS)
    def test_bracket_contains_reference(self, y, x, coth_reference):
        assert coth_mean_bounds(y, x).contains(coth_reference[(y, x)])

    @pytest.mark.parametrize('y, x', COTH_PAIRS)
    def test_corrected_disc_contains_reference(self, y, x, coth_reference):
        disc = coth_mean_corrected(y, x)
        assert abs(coth_reference[(y, x)] - disc.corrected) <= disc.corrected_radius

    @pytest.mark.parametrize('y, x', COTH_PAIRS)
    def test_oracle_matches_reference(self, y, x, coth_reference):
        assert coth_mean_oracle(y, x) == pytest.approx(coth_reference[(y, x)], rel=1e-12)

    def test_bracket_width(self):
        bracket = coth_mean_bounds(0.5, 1.0)
        assert bracket.width == pytest.approx(16.0 / 243.0 * (1.0 + 0.5 + 0.25), rel=1e-12)

    def test_collapsing_interval_tends_to_pointwise_bracket(self, coth_of_one):
        bracket = coth_mean_bounds(1.0 - 1e-7, 1.0)
        lower, upper = eq11_pointwise(1.0)
        assert bracket.upper == pytest.approx(upper, abs=1e-6)
        assert bracket.lower == pytest.approx(lower, abs=1e-6)
        assert bracket.width == pytest.approx(16.0 / 81.0, rel=1e-6)
        assert bracket.contains(coth_of_one, tol=1e-6)

    def test_corrected_disc_narrower_on_unit_range(self):
        for y, x in ((0.5, 1.0), (0.1, 0.2), (0.9, 1.0)):
            assert 2.0 * coth_mean_corrected(y, x).corrected_radius < coth_mean_bounds(y, x).width

    def test_large_arguments(self):
        bracket = coth_mean_bounds(400.0, 401.0)
        assert math.isfinite(bracket.upper)

    @pytest.mark.parametrize('y, x', [(0.0, 1.0), (-1.0, 1.0), (2.0, 1.0), (1.0, 1.0)])
    def test_invalid_limits(self, y, x):
        with pytest.raises(EvaluationDomainError):
            coth_mean_bounds(y, x)

    def test_result_type(self):
        bracket = coth_mean_bounds(1.0, 2.0)
        disc = coth_mean_corrected(1.0, 2.0)
        assert bracket.theorem == 'THM5' and disc.theorem == 'THM6'
        assert bracket.to_enclosure().theorem == 'THM5'
        assert list(disc.to_dict()) == ['y', 'x', 'lower', 'upper', 'corrected', 'corrected_radius']
        with pytest.raises(ValueError):
            CothBounds(y=1.0, x=2.0, lower=1.0, upper=0.0)


class TestPointwiseBrackets:
    """Test the pointwise brackets behind the mean brackets"""

    def test_coth_bracket(self):
        t = np.logspace(-3.0, 1.0, 200)
        lower, upper = eq11_pointwise(t)
        values = coth(t) / t
        assert np.all(values >= lower - 1e-12)
        assert np.all(values <= upper + 1e-12)

    def test_corrected_coth_bracket(self):
        t = np.linspace(0.1, 3.0, 100)
        center, radius = eq11_corrected_pointwise(t)
        assert np.all(np.abs(coth(t) / t - center) <= radius + 1e-12)

    def test_cosh_bracket(self):
        t = np.linspace(0.01, 5.0, 100)
        lower, upper = eq10_pointwise(t)
        values = np.sinh(2.0 * t) / (2.0 * t)
        assert np.all((values - lower) / values >= -1e-12)
        assert np.all((upper - values) / values >= -1e-12)

    def test_scalar_input(self):
        lower, upper = eq11_pointwise(1.0)
        assert isinstance(lower, float) and lower < upper

    @pytest.mark.parametrize('func', [eq11_pointwise, eq11_corrected_pointwise, eq10_pointwise])
    def test_non_positive(self, func):
        with pytest.raises(EvaluationDomainError):
            func(np.array([1.0, 0.0]))
