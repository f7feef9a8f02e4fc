#!/usr/bin/env python3
"""
Sharpness witnesses and the empirical best-constant search

Witnesses are closed-form piecewise functions (no expression language, no jets)
so that their values stay exact across the knots. Their Simpson defect is
available both from piecewise antiderivatives and from the reference oracle.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.interpolate import CubicSpline, PchipInterpolator, PPoly

from ..config import config
from ..constants import SEARCH_BRACKETS
from ..errors import BoundViolationError
from ..utils import ordered_map
from .models import parse_smoothness
from .simpson import integrate_function

logger = logging.getLogger(__name__)

# Oracle tolerance for witness defects
WITNESS_ORACLE_TOL = 1e-13

# Allowed excess of a search ratio over the proven constant
VIOLATION_TOLERANCE = 1e-10

ANALYTIC_METHOD = 'analytic'
ORACLE_METHOD = 'oracle'


class Witness(Enum):
    """Closed-form functions that reach (or approach) equality in a bound"""
    ABS_CUBIC = 'abs-cubic'    # |t|^3/6, C2 with second derivative |t|
    D_FUNCTION = 'd'           # piecewise C3 function with third derivative clip(t, -1, 1)
    X4 = 'x4'
    X5 = 'x5'

    @property
    def smoothness(self) -> int:
        return _SMOOTHNESS[self]

    @classmethod
    def parse(cls, name: str) -> 'Witness':
        text = str(name).strip().lower().replace('_', '-')
        aliases = {'abs': cls.ABS_CUBIC, 'abs-cubic': cls.ABS_CUBIC, 'd': cls.D_FUNCTION,
                   'd-function': cls.D_FUNCTION, 'x4': cls.X4, 'x5': cls.X5}
        if text not in aliases:
            raise ValueError(f"Unknown witness: {name!r} (expected abs-cubic, d, x4 or x5)")
        return aliases[text]


_SMOOTHNESS = {
    Witness.ABS_CUBIC: 2,
    Witness.D_FUNCTION: 3,
    Witness.X4: 4,
    Witness.X5: 4,
}


def _abs_cubic(x: np.ndarray, order: int) -> np.ndarray:
    ax = np.abs(x)
    return (ax ** 3 / 6.0, x * ax / 2.0, ax)[order]


def _d_function(x: np.ndarray, order: int) -> np.ndarray:
    left = (-x ** 3 / 6.0 - x / 3.0, -x ** 2 / 2.0 - 1.0 / 3.0, -x, -np.ones_like(x))
    middle = (x ** 4 / 24.0 + x ** 2 / 4.0 - x / 6.0 + 1.0 / 24.0,
              x ** 3 / 6.0 + x / 2.0 - 1.0 / 6.0,
              x ** 2 / 2.0 + 0.5,
              x)
    right = (x ** 3 / 6.0, x ** 2 / 2.0, x, np.ones_like(x))
    return np.where(x <= -1.0, left[order], np.where(x >= 1.0, right[order], middle[order]))


def _monomial(x: np.ndarray, order: int, power: int) -> np.ndarray:
    coefficient = math.perm(power, order)
    return coefficient * x ** (power - order)


def witness_eval(w: Witness, x, order: int = 0):
    """
    Closed-form value or derivative of a witness.

    Args:
        w: Witness
        x: Point or array of points
        order: Derivative order, at most the witness's smoothness

    Returns:
        float for scalar input, array otherwise
    """
    if not 0 <= order <= w.smoothness:
        raise ValueError(f"{w.name} is C{w.smoothness}; derivative of order {order} is not available")
    arr = np.asarray(x, dtype=float)
    if w is Witness.ABS_CUBIC:
        out = _abs_cubic(arr, order)
    elif w is Witness.D_FUNCTION:
        out = _d_function(arr, order)
    else:
        out = _monomial(arr, order, 4 if w is Witness.X4 else 5)
    out = np.asarray(out, dtype=float)
    return float(out) if out.ndim == 0 else out


def witness_antiderivative(w: Witness, x):
    """Continuous antiderivative F with F' = witness"""
    arr = np.asarray(x, dtype=float)
    if w is Witness.ABS_CUBIC:
        out = np.sign(arr) * arr ** 4 / 24.0
    elif w is Witness.D_FUNCTION:
        left = -arr ** 4 / 24.0 - arr ** 2 / 6.0 - 1.0 / 120.0
        middle = arr ** 5 / 120.0 + arr ** 3 / 12.0 - arr ** 2 / 12.0 + arr / 24.0
        right = arr ** 4 / 24.0 + 1.0 / 120.0
        out = np.where(arr <= -1.0, left, np.where(arr >= 1.0, right, middle))
    elif w is Witness.X4:
        out = arr ** 5 / 5.0
    else:
        out = arr ** 6 / 6.0
    out = np.asarray(out, dtype=float)
    return float(out) if out.ndim == 0 else out


def witness_range(w: Witness, a: float, b: float) -> Tuple[float, float]:
    """Exact (m, M) of the witness's top derivative over [a, b]"""
    if not a < b:
        raise ValueError(f"Interval requires a < b, got [{a}, {b}]")
    if w is Witness.ABS_CUBIC:
        low = 0.0 if a <= 0.0 <= b else min(abs(a), abs(b))
        return low, max(abs(a), abs(b))
    if w is Witness.D_FUNCTION:
        return float(np.clip(a, -1.0, 1.0)), float(np.clip(b, -1.0, 1.0))
    if w is Witness.X4:
        return 24.0, 24.0
    return 120.0 * a, 120.0 * b


def witness_t_functional(w: Witness, a: float, b: float, method: str = ANALYTIC_METHOD) -> float:
    """Simpson defect of a witness over [a, b], from antiderivatives or from the oracle"""
    if not a < b:
        raise ValueError(f"Interval requires a < b, got [{a}, {b}]")
    ga, gm, gb = witness_eval(w, np.array([a, 0.5 * (a + b), b]))
    three_point = (ga + gb) / 6.0 + 2.0 * gm / 3.0
    if method == ANALYTIC_METHOD:
        mean = (witness_antiderivative(w, b) - witness_antiderivative(w, a)) / (b - a)
    elif method == ORACLE_METHOD:
        mean = integrate_function(lambda x: witness_eval(w, x), a, b, tol=WITNESS_ORACLE_TOL) / (b - a)
    else:
        raise ValueError(f"Unknown method: {method!r} (expected analytic or oracle)")
    return float(three_point - mean)


def closed_form_sharpness(a: float) -> float:
    """(1/1152) |1 - 2/a^2 + 2/a^3 - 3/(5a^4)|, the D_FUNCTION ratio on [-a, a]"""
    return abs(1.0 - 2.0 / a ** 2 + 2.0 / a ** 3 - 3.0 / (5.0 * a ** 4)) / 1152.0


def sharpness_ratio(w: Witness, a: float, method: str = ANALYTIC_METHOD) -> float:
    """
    How close a witness comes to its bound.

    ABS_CUBIC and D_FUNCTION are measured on [-a, a] as
    |T| / ((M_k - m_k)(2a)^k) with k the witness's smoothness. X4 and X5 are
    measured on [0, a] against the upper end M4 (b-a)^4/2880 of the fourth-order
    enclosure (1 for X4, 1/2 for X5).

    Args:
        w: Witness
        a: Half-width (or right end for X4/X5); a > 1 for D_FUNCTION, a > 0 otherwise
        method: 'analytic' or 'oracle' evaluation of T
    """
    if w is Witness.D_FUNCTION and not a > 1.0:
        raise ValueError(f"D_FUNCTION ratio needs a > 1, got {a}")
    if not a > 0.0:
        raise ValueError(f"Sharpness parameter must be positive, got {a}")

    if w in (Witness.X4, Witness.X5):
        t = witness_t_functional(w, 0.0, a, method)
        _, M4 = witness_range(w, 0.0, a)
        return abs(t) / (M4 * a ** 4 / 2880.0)

    k = w.smoothness
    t = witness_t_functional(w, -a, a, method)
    m, M = witness_range(w, -a, a)
    return abs(t) / ((M - m) * (2.0 * a) ** k)


@dataclass
class SearchReport:
    """Outcome of an empirical constant search"""
    smoothness: str
    trials: int
    best_ratio: float
    known_lower: Optional[float]
    known_upper: float
    candidate_description: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'class': self.smoothness,
            'trials': self.trials,
            'best_ratio': self.best_ratio,
            'paper_lower': self.known_lower,
            'paper_upper': self.known_upper,
            'candidate_description': self.candidate_description,
        }


def _knots_and_roots(pp: PPoly, order: int) -> np.ndarray:
    """Candidate extremum locations of the order-th derivative: knots plus interior critical points"""
    points = [np.asarray(pp.x, dtype=float)]
    slope = pp.derivative(order + 1)
    roots = np.asarray(slope.roots(discontinuity=False, extrapolate=False), dtype=float)
    roots = roots[np.isfinite(roots)]
    if roots.size:
        points.append(roots[(roots >= pp.x[0]) & (roots <= pp.x[-1])])
    return np.concatenate(points)


def candidate_ratio(pp: PPoly, smoothness: str) -> Optional[float]:
    """
    |T| / ((M_k - m_k)(b - a)^k) for a piecewise polynomial on its breakpoint span.

    Returns None for candidates whose k-th derivative is constant (no range).
    """
    cls = parse_smoothness(smoothness)
    if cls not in SEARCH_BRACKETS:
        raise ValueError(f"Constant search covers C1 and C2, got {smoothness!r}")
    k = 1 if cls == 'C1' else 2
    a, b = float(pp.x[0]), float(pp.x[-1])
    w = b - a

    values = np.asarray(pp(_knots_and_roots(pp, k), nu=k), dtype=float)
    spread = float(np.max(values) - np.min(values))
    scale = max(1.0, float(np.max(np.abs(values))))
    if spread <= 1e-13 * scale:
        return None

    ga, gm, gb = np.asarray(pp(np.array([a, 0.5 * (a + b), b])), dtype=float)
    t = (ga + gb) / 6.0 + 2.0 * gm / 3.0 - float(pp.integrate(a, b)) / w
    return abs(float(t)) / (spread * w ** k)


def abs_cubic_candidate() -> PPoly:
    """|t|^3/6 on [-1, 1] as a two-piece polynomial (columns are pieces, highest power first)"""
    coefficients = np.array([
        [-1.0 / 6.0, 1.0 / 6.0],
        [0.5, 0.0],
        [-0.5, 0.0],
        [1.0 / 6.0, 0.0],
    ])
    return PPoly(coefficients, np.array([-1.0, 0.0, 1.0]))


def random_candidate(smoothness: str, rng: np.random.Generator) -> Tuple[PPoly, str]:
    """Random spline on a random interval: C2 cubic spline, or C1 monotone-cubic interpolant"""
    cls = parse_smoothness(smoothness)
    a = rng.uniform(-2.0, 2.0)
    b = a + rng.uniform(0.25, 4.0)
    n_interior = int(rng.integers(1, 7))
    knots = np.concatenate([[a], np.sort(rng.uniform(a, b, n_interior)), [b]])
    if np.any(np.diff(knots) <= 1e-9 * (b - a)):
        knots = np.linspace(a, b, n_interior + 2)
    values = rng.normal(size=knots.size)

    if cls == 'C2':
        spline = CubicSpline(knots, values, bc_type='not-a-knot' if knots.size > 3 else 'natural')
        kind = 'cubic spline'
    else:
        spline = PchipInterpolator(knots, values)
        kind = 'pchip cubic'
    pp = PPoly(spline.c, spline.x)
    return pp, f"{kind} on [{a:.6g}, {b:.6g}] with {knots.size} knots"


def _normalized(pp: PPoly, smoothness: str) -> PPoly:
    """Scale so the relevant derivative range has width 1"""
    k = 1 if parse_smoothness(smoothness) == 'C1' else 2
    values = np.asarray(pp(_knots_and_roots(pp, k), nu=k), dtype=float)
    spread = float(np.max(values) - np.min(values))
    return PPoly(pp.c / spread, pp.x) if spread > 0.0 else pp


def constant_search(smoothness: str = 'C2', seed: Optional[int] = None, trials: Optional[int] = None,
                    include_seed: bool = True, threads: Optional[int] = None) -> SearchReport:
    """
    Randomized search for the worst ratio |T| / ((M_k - m_k)(b - a)^k).

    Trial ``i`` draws from ``default_rng([seed, i])`` so results do not depend
    on the thread count. The |t|^3/6 candidate is evaluated first when
    ``include_seed`` is set; the report counts only the random trials. The best
    ratio found is reported, never claimed optimal.

    Raises:
        BoundViolationError: a candidate beats the proven constant
    """
    cls = parse_smoothness(smoothness)
    if cls not in SEARCH_BRACKETS:
        raise ValueError(f"Constant search covers C1 and C2, got {smoothness!r}")
    seed = config.seed if seed is None else seed
    trials = config.search_trials if trials is None else trials
    if trials < 1:
        raise ValueError(f"Search needs at least one trial, got {trials}")

    known_lower, known_upper = SEARCH_BRACKETS[cls]
    upper = float(known_upper)

    def run_trial(index: int) -> Tuple[Optional[float], str]:
        rng = np.random.default_rng([seed, index])
        pp, description = random_candidate(cls, rng)
        ratio = candidate_ratio(_normalized(pp, cls), cls)
        logger.debug(f"Trial {index}: {description} -> {ratio!r}")
        return ratio, description

    results: List[Tuple[Optional[float], str]] = []
    if include_seed:
        results.append((candidate_ratio(abs_cubic_candidate(), cls), "|t|^3/6 on [-1, 1]"))
    results.extend(ordered_map(run_trial, range(trials), threads))

    for ratio, description in results:
        if ratio is not None and ratio > upper + VIOLATION_TOLERANCE:
            raise BoundViolationError(
                f"{cls} ratio {ratio!r} of {description} exceeds the proven constant {upper!r}"
            )

    scored = [(ratio, description) for ratio, description in results if ratio is not None]
    if scored:
        best_ratio, best_description = max(scored, key=lambda item: item[0])
    else:
        best_ratio, best_description = 0.0, 'no candidate with a non-degenerate derivative range'

    logger.info(f"{cls} search: best ratio {best_ratio!r} over {len(results)} candidates")
    return SearchReport(
        smoothness=cls,
        trials=trials,
        best_ratio=best_ratio,
        known_lower=None if known_lower is None else float(known_lower),
        known_upper=upper,
        candidate_description=best_description,
    )
