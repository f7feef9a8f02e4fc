"""
Independent high-precision reference values (mpmath, 40 digits)
"""
from functools import lru_cache

import mpmath
import pytest

DIGITS = 40

COTH_PAIRS = [(0.5, 1.0), (1.0, 2.0), (0.1, 0.2)]


@lru_cache(maxsize=None)
def coth_mean(y: float, x: float) -> float:
    """Mean of coth(t)/t over [y, x]"""
    with mpmath.workdps(DIGITS):
        total = mpmath.quad(lambda t: mpmath.coth(t) / t, [mpmath.mpf(y), mpmath.mpf(x)])
        return float(total / (mpmath.mpf(x) - mpmath.mpf(y)))


@lru_cache(maxsize=None)
def integral(source: str, a: float, b: float) -> float:
    """Integral of a small set of named integrands over [a, b]"""
    functions = {
        'exp(t)': mpmath.exp,
        'cosh(t)': mpmath.cosh,
        'coth(t)/t': lambda t: mpmath.coth(t) / t,
        'sin(t)': mpmath.sin,
        'sqrt(t)': mpmath.sqrt,
        '1/(1 + t^2)': lambda t: 1 / (1 + t ** 2),
    }
    with mpmath.workdps(DIGITS):
        return float(mpmath.quad(functions[source], [mpmath.mpf(a), mpmath.mpf(b)]))


def simpson_defect(source: str, a: float, b: float) -> float:
    """Three-point mean minus integral mean, both in high precision"""
    functions = {
        'exp(t)': mpmath.exp,
        'cosh(t)': mpmath.cosh,
        'sin(t)': mpmath.sin,
    }
    f = functions[source]
    with mpmath.workdps(DIGITS):
        a_, b_ = mpmath.mpf(a), mpmath.mpf(b)
        three_point = (f(a_) + f(b_)) / 6 + 2 * f((a_ + b_) / 2) / 3
        return float(three_point - mpmath.quad(f, [a_, b_]) / (b_ - a_))


@pytest.fixture
def coth_reference():
    """{(y, x): mean of coth(t)/t} for the application test pairs"""
    return {pair: coth_mean(*pair) for pair in COTH_PAIRS}


@pytest.fixture
def coth_of_one():
    with mpmath.workdps(DIGITS):
        return float(mpmath.coth(1))
