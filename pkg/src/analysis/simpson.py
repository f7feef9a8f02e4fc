#!/usr/bin/env python3
"""
Simpson defect, classical and corrected Simpson estimates, the three integral
representations of the defect, and the reference integration oracle
"""

import logging
import math
from typing import Callable, Optional

import numpy as np

from ..config import config
from ..constants import CORRECTION_FACTOR
from ..errors import OracleConvergenceError
from ..expr import Expr, eval_jet, make_function
from .models import Interval

logger = logging.getLogger(__name__)

MIN_ORACLE_TOL = 1e-14

# Uniform panels before adaptive bisection starts
INITIAL_PANELS = 8

_EPS = np.finfo(float).eps


def integrate_function(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                       tol: Optional[float] = None, max_panels: Optional[int] = None) -> float:
    """
    Adaptive Simpson with one Richardson step per bisection.

    Each panel is compared with its two halves; the panel is accepted once the
    extrapolated correction (S2 - S1)/15 is within its share of the tolerance,
    and contributes S2 + (S2 - S1)/15. All active panels of a sweep are evaluated
    in one vectorized call.

    Args:
        f: Vectorized integrand
        a, b: Integration limits (a < b)
        tol: Absolute-or-relative tolerance (default 1e-12)
        max_panels: Panel cap (default 2**20)

    Returns:
        Extrapolated integral

    Raises:
        OracleConvergenceError: panel cap reached before convergence
    """
    tol = config.oracle_tol if tol is None else tol
    max_panels = config.oracle_max_panels if max_panels is None else max_panels
    if tol < MIN_ORACLE_TOL:
        raise ValueError(f"Oracle tolerance must be >= {MIN_ORACLE_TOL}, got {tol}")
    if not a < b:
        raise ValueError(f"Integration limits require a < b, got [{a}, {b}]")

    n = INITIAL_PANELS
    edges = a + (b - a) * np.arange(n + 1) / n
    edges[-1] = b
    points = np.empty(2 * n + 1)
    points[0::2] = edges
    points[1::2] = 0.5 * (edges[:-1] + edges[1:])
    values = np.asarray(f(points), dtype=float)

    left, mid, right = edges[:-1], points[1::2], edges[1:]
    fl, fm, fr = values[0:-1:2], values[1::2], values[2::2]
    whole = (right - left) / 6.0 * (fl + 4.0 * fm + fr)

    abs_tol = tol * max(1.0, abs(math.fsum(whole)))
    total_panels = n
    accepted = []
    sweeps = 0

    while left.size:
        sweeps += 1
        width = right - left
        k = left.size
        quarter = np.asarray(f(np.concatenate([left + 0.25 * width, left + 0.75 * width])), dtype=float)
        fq1, fq3 = quarter[:k], quarter[k:]

        s_left = width / 12.0 * (fl + 4.0 * fq1 + fm)
        s_right = width / 12.0 * (fm + 4.0 * fq3 + fr)
        refined = s_left + s_right
        correction = refined - whole

        local_tol = 15.0 * abs_tol * width / (b - a)
        noise = 64.0 * _EPS * (np.abs(s_left) + np.abs(s_right))
        done = np.abs(correction) <= np.maximum(local_tol, noise)
        accepted.append(refined[done] + correction[done] / 15.0)

        todo = ~done
        count = int(np.count_nonzero(todo))
        if count == 0:
            break
        total_panels += count
        if total_panels > max_panels:
            raise OracleConvergenceError(
                f"Oracle did not converge on [{a}, {b}] within {max_panels} panels (tol={tol})"
            )

        left, mid, right = left[todo], mid[todo], right[todo]
        fl, fm, fr = fl[todo], fm[todo], fr[todo]
        fq1, fq3 = fq1[todo], fq3[todo]
        s_left, s_right = s_left[todo], s_right[todo]

        new_left = np.empty(2 * count)
        new_right = np.empty(2 * count)
        new_fl = np.empty(2 * count)
        new_fm = np.empty(2 * count)
        new_fr = np.empty(2 * count)
        new_whole = np.empty(2 * count)

        new_left[0::2], new_left[1::2] = left, mid
        new_right[0::2], new_right[1::2] = mid, right
        new_fl[0::2], new_fl[1::2] = fl, fm
        new_fm[0::2], new_fm[1::2] = fq1, fq3
        new_fr[0::2], new_fr[1::2] = fm, fr
        new_whole[0::2], new_whole[1::2] = s_left, s_right

        left, right = new_left, new_right
        mid = 0.5 * (left + right)
        fl, fm, fr, whole = new_fl, new_fm, new_fr, new_whole

    # fsum is exactly rounded, hence independent of panel order
    result = math.fsum(np.concatenate(accepted).tolist())
    logger.debug(f"Oracle on [{a:g}, {b:g}]: {total_panels} panels, {sweeps} sweeps -> {result!r}")
    return result


def oracle_integral(e: Expr, I: Interval, tol: Optional[float] = None,
                    max_panels: Optional[int] = None) -> float:
    """Reference value of the integral of ``e`` over ``I``"""
    return integrate_function(make_function(e), I.a, I.b, tol, max_panels)


def simpson_mean(e: Expr, I: Interval) -> float:
    """Normalized three-point mean [g(a) + g(b)]/6 + (2/3) g((a+b)/2)"""
    ga, gm, gb = eval_jet(e, np.array([I.a, I.midpoint, I.b]), order=0).c0
    return (ga + gb) / 6.0 + 2.0 * gm / 3.0


def simpson_estimate(e: Expr, I: Interval) -> float:
    """Classical Simpson estimate (b-a)[g(a) + 4g(m) + g(b)]/6"""
    ga, gm, gb = eval_jet(e, np.array([I.a, I.midpoint, I.b]), order=0).c0
    return I.width * (ga + 4.0 * gm + gb) / 6.0


def t_functional(e: Expr, I: Interval, tol: Optional[float] = None) -> float:
    """
    Simpson defect T_g(a,b): three-point mean minus the integral mean.

    The integral term comes from the reference oracle.
    """
    return simpson_mean(e, I) - oracle_integral(e, I, tol) / I.width


def second_derivative_defect(e: Expr, I: Interval) -> float:
    """Midpoint defect of the second derivative: (g''(a) + g''(b))/2 - g''(m)"""
    da, dm, db = eval_jet(e, np.array([I.a, I.midpoint, I.b]), order=2).c2
    return 0.5 * (da + db) - dm


def corrected_simpson(e: Expr, I: Interval) -> float:
    """Simpson estimate minus (b-a)^3/360 times the second-derivative midpoint defect"""
    correction = float(CORRECTION_FACTOR) * I.width ** 3 * second_derivative_defect(e, I)
    return simpson_estimate(e, I) - correction


def correction_term(e: Expr, I: Interval) -> float:
    """Normalized correction (b-a)^2/360 * D subtracted from the defect by the corrected rule"""
    return float(CORRECTION_FACTOR) * I.width ** 2 * second_derivative_defect(e, I)


def corrected_t_functional(e: Expr, I: Interval, tol: Optional[float] = None) -> float:
    """Defect of the corrected rule in normalized form"""
    return t_functional(e, I, tol) - correction_term(e, I)


def t_via_representation(e: Expr, I: Interval, order: int, tol: Optional[float] = None) -> float:
    """
    Simpson defect through its integral representation of the given order.

    With u = a s/2 + b(1 - s/2) and v = b s/2 + a(1 - s/2), s in [0, 1]:

        order 1: (b-a)/12   * int (1 - 3s)   [g'(u) - g'(v)] ds
        order 2: (b-a)^2/48 * int s(2 - 3s)  [g''(u) + g''(v)] ds
        order 3: (b-a)^3/96 * int s^2(1 - s) [g'''(u) - g'''(v)] ds

    The s-integral is evaluated by the oracle (default tolerance 1e-10).
    """
    if order not in (1, 2, 3):
        raise ValueError(f"Representation order must be 1, 2 or 3, got {order}")
    tol = config.representation_tol if tol is None else tol
    a, b, w = I.a, I.b, I.width

    if order == 1:
        weight, sign, prefactor = (lambda s: 1.0 - 3.0 * s), -1.0, w / 12.0
    elif order == 2:
        weight, sign, prefactor = (lambda s: s * (2.0 - 3.0 * s)), 1.0, w ** 2 / 48.0
    else:
        weight, sign, prefactor = (lambda s: s * s * (1.0 - s)), -1.0, w ** 3 / 96.0

    def integrand(s: np.ndarray) -> np.ndarray:
        u = a * s / 2.0 + b * (1.0 - s / 2.0)
        v = b * s / 2.0 + a * (1.0 - s / 2.0)
        derivs = np.asarray(eval_jet(e, np.concatenate([u, v]), order=order).derivative(order))
        du, dv = derivs[:s.size], derivs[s.size:]
        return weight(s) * (du + sign * dv)

    return prefactor * integrate_function(integrand, 0.0, 1.0, tol)
