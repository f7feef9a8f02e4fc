#!/usr/bin/env python3
"""
Mean of coth(t)/t over [y, x]: two-sided bracket and corrected estimate

Both follow from the Simpson bounds applied to cosh on [-2t, 2t], divided by
sinh(t)^2 and integrated over [y, x].
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..constants import THEOREM_FRACTIONS, THM5, THM6
from ..errors import EvaluationDomainError
from .models import ANALYTIC, Enclosure
from .simpson import integrate_function

logger = logging.getLogger(__name__)

# Below this |t| coth uses its Laurent series
SERIES_CUTOFF = 1e-4

# Above this |t| coth(t) is 1/tanh(t) (cosh and sinh would overflow later)
LARGE_ARGUMENT = 20.0

# sinh(x) overflows past ~710; keep a margin for the product sinh(x) sinh(y)
_SINH_PRODUCT_LIMIT = 350.0

_GAP = float(THEOREM_FRACTIONS[THM5])          # 16/243
_RADIUS = float(THEOREM_FRACTIONS[THM6])       # 22/1125
_POINTWISE_GAP = 16.0 / 81.0
_POINTWISE_SHIFT = 4.0 / 45.0
_POINTWISE_RADIUS = 22.0 / 225.0
_MEAN_SHIFT = 4.0 / 135.0


def coth(t):
    """Hyperbolic cotangent, accurate near zero; scalar or array"""
    arr = np.asarray(t, dtype=float)
    if np.any(arr == 0.0):
        raise EvaluationDomainError("coth is undefined", point=0.0)
    with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
        series = 1.0 / arr + arr / 3.0 - arr ** 3 / 45.0
        direct = np.cosh(arr) / np.sinh(arr)
        saturated = 1.0 / np.tanh(arr)
    magnitude = np.abs(arr)
    out = np.where(magnitude < SERIES_CUTOFF, series, np.where(magnitude > LARGE_ARGUMENT, saturated, direct))
    return float(out) if out.ndim == 0 else out


def _check_pair(y: float, x: float) -> None:
    if not y > 0.0:
        raise EvaluationDomainError(f"Lower limit must be positive, got y={y!r}", point=y)
    if not y < x:
        raise EvaluationDomainError(f"Limits require y < x, got y={y!r}, x={x!r}", point=x)


def _coth_slope(y: float, x: float) -> float:
    """(coth x - coth y)/(x - y) without cancellation when x is close to y"""
    d = x - y
    if x < _SINH_PRODUCT_LIMIT:
        return -float(np.sinh(d) / d / (np.sinh(x) * np.sinh(y)))
    return (coth(x) - coth(y)) / d


def _quadratic_mean(y: float, x: float) -> float:
    """x^2 + xy + y^2, three times the mean of t^2 over [y, x]"""
    return x * x + x * y + y * y


def _quartic_mean(y: float, x: float) -> float:
    """(x^5 - y^5)/(x - y), five times the mean of t^4 over [y, x]"""
    return x ** 4 + x ** 3 * y + x ** 2 * y ** 2 + x * y ** 3 + y ** 4


@dataclass(frozen=True)
class CothBounds:
    """Bracket for the mean of coth(t)/t over [y, x], optionally with a corrected centre"""
    y: float
    x: float
    lower: float
    upper: float
    corrected: Optional[float] = None
    corrected_radius: Optional[float] = None

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError(f"CothBounds requires lower <= upper, got [{self.lower}, {self.upper}]")
        if (self.corrected is None) != (self.corrected_radius is None):
            raise ValueError("corrected and corrected_radius must be given together")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def theorem(self) -> str:
        return THM5 if self.corrected is None else THM6

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lower - tol <= value <= self.upper + tol

    def to_enclosure(self) -> Enclosure:
        return Enclosure(self.lower, self.upper, self.theorem, confidence=ANALYTIC)

    def to_dict(self) -> Dict[str, Any]:
        data = {'y': self.y, 'x': self.x, 'lower': self.lower, 'upper': self.upper}
        if self.corrected is not None:
            data['corrected'] = self.corrected
            data['corrected_radius'] = self.corrected_radius
        return data


def coth_mean_bounds(y: float, x: float) -> CothBounds:
    """
    Two-sided bracket for (1/(x-y)) * integral_y^x coth(t)/t dt:

        upper = 2/3 - (coth x - coth y)/(x - y)
        lower = upper - (16/243)(x^2 + xy + y^2)

    Raises:
        EvaluationDomainError: y <= 0 or y >= x
    """
    _check_pair(y, x)
    upper = 2.0 / 3.0 - _coth_slope(y, x)
    lower = upper - _GAP * _quadratic_mean(y, x)
    return CothBounds(y=y, x=x, lower=lower, upper=upper)


def coth_mean_corrected(y: float, x: float) -> CothBounds:
    """
    Corrected estimate of the same mean with an error radius.

    The centre subtracts the mean of (4/45)t^2, i.e. (4/135)(x^2 + xy + y^2),
    from the upper bracket end; the radius is the mean of (22/225)t^4,
    i.e. (22/1125)(x^5 - y^5)/(x - y).
    """
    _check_pair(y, x)
    center = 2.0 / 3.0 - _coth_slope(y, x) - _MEAN_SHIFT * _quadratic_mean(y, x)
    radius = _RADIUS * _quartic_mean(y, x)
    return CothBounds(y=y, x=x, lower=center - radius, upper=center + radius,
                      corrected=center, corrected_radius=radius)


def coth_mean_oracle(y: float, x: float, tol: Optional[float] = None) -> float:
    """Reference mean of coth(t)/t over [y, x]"""
    _check_pair(y, x)
    return integrate_function(lambda t: coth(t) / t, y, x, tol) / (x - y)


def _check_positive(t) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if np.any(arr <= 0.0):
        bad = float(arr[arr <= 0.0].flat[0]) if arr.ndim else float(arr)
        raise EvaluationDomainError("Pointwise bracket needs t > 0", point=bad)
    return arr


def _unwrap(*values):
    return tuple(float(v) if np.ndim(v) == 0 else v for v in values)


def eq11_pointwise(t) -> Tuple[Any, Any]:
    """coth^2 t - 1/3 - (16/81)t^2 <= coth(t)/t <= coth^2 t - 1/3, for t > 0"""
    arr = _check_positive(t)
    upper = coth(arr) ** 2 - 1.0 / 3.0
    lower = upper - _POINTWISE_GAP * arr ** 2
    return _unwrap(lower, upper)


def eq11_corrected_pointwise(t) -> Tuple[Any, Any]:
    """(center, radius) with |coth(t)/t - center| <= radius, center = coth^2 t - 1/3 - (4/45)t^2"""
    arr = _check_positive(t)
    center = coth(arr) ** 2 - 1.0 / 3.0 - _POINTWISE_SHIFT * arr ** 2
    radius = _POINTWISE_RADIUS * arr ** 4
    return _unwrap(center, radius)


def eq10_pointwise(t) -> Tuple[Any, Any]:
    """Bracket of sinh(2t)/(2t): [cosh 2t/3 + 2/3 - (8/81)t^2 (cosh 2t - 1), cosh 2t/3 + 2/3]"""
    arr = _check_positive(t)
    c = np.cosh(2.0 * arr)
    upper = c / 3.0 + 2.0 / 3.0
    lower = upper - 8.0 / 81.0 * arr ** 2 * (c - 1.0)
    return _unwrap(lower, upper)
