#!/usr/bin/env python3
"""
Error-bound and enclosure formulas for the Simpson defect and the integral mean

Symmetric bounds enclose the defect T_g(a,b); the Hermite-Hadamard family
encloses the integral mean. Enclosures built from sampled derivative ranges are
widened by the inflation factor and labelled "sampled-range".
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from ..config import config
from ..constants import (
    EQ4, EQ7, EQ8_9, HH, HH_M2_LOWER, HH_M2_UPPER,
    THEOREM_FRACTIONS, THM0, THM1, THM2, THM3, THM4, TIE_ORDER,
)
from ..errors import (
    ConvexityError, EmptyEnclosureError, MajorizationError, NonSmoothError,
)
from ..expr import Expr, eval_jet
from .models import (
    ANALYTIC, SAMPLED, SMOOTHNESS_ORDER, DerivativeRange, Enclosure, Interval, parse_smoothness,
)
from .ranges import estimate_derivative_range
from .simpson import correction_term, second_derivative_defect

logger = logging.getLogger(__name__)

# Sampled sign checks accept values down to this (scaled) tolerance
CONVEXITY_TOLERANCE = 1e-12

# Rounding inversions smaller than this many ulps collapse to a point
_COLLAPSE_ULPS = 64

_EPS = np.finfo(float).eps


def _c(tag: str) -> float:
    return float(THEOREM_FRACTIONS[tag])


def _bracket(lower: float, upper: float, theorem: str, confidence: str, scale: float) -> Enclosure:
    if lower > upper:
        if lower - upper > _COLLAPSE_ULPS * _EPS * max(1.0, abs(scale)):
            raise EmptyEnclosureError(
                f"{theorem} bracket is empty: lower {lower!r} > upper {upper!r}; range estimate too loose"
            )
        lower = upper = 0.5 * (lower + upper)
    return Enclosure(lower, upper, theorem, confidence=confidence)


def _symmetric(radius: float, theorem: str, confidence: str) -> Enclosure:
    return Enclosure(-radius, radius, theorem, confidence=confidence)


def _prepare(r: DerivativeRange, order: int, I: Interval, inflation: Optional[float]) -> DerivativeRange:
    factor = config.inflation if inflation is None else inflation
    return r.require(order, I).inflated(factor)


def _endpoint_values(e: Expr, I: Interval):
    ga, gm, gb = eval_jet(e, np.array([I.a, I.midpoint, I.b]), order=0).c0
    return float(ga), float(gm), float(gb)


def check_sign(e: Expr, I: Interval, order: int, sign: float = 1.0, samples: Optional[int] = None) -> bool:
    """
    Sampled check that sign * (order-th derivative) >= 0 on I.

    Returns False when the derivatives are unavailable (non-smooth expression),
    True when the check passed; raises ConvexityError on a violating sample.
    """
    samples = config.convexity_samples if samples is None else samples
    x = np.linspace(I.a, I.b, samples)
    try:
        values = sign * np.asarray(eval_jet(e, x, order=order).derivative(order))
    except NonSmoothError:
        logger.warning(f"Derivative of order {order} unavailable; sign check skipped on [{I.a:g}, {I.b:g}]")
        return False
    threshold = -CONVEXITY_TOLERANCE * max(1.0, float(np.max(np.abs(values))))
    bad = values < threshold
    if np.any(bad):
        point = float(x[int(np.argmax(bad))])
        raise ConvexityError(
            f"Sign check of derivative {order} failed at t={point!r} (value {float(values[bad][0] * sign)!r})"
        )
    return True


def hh_enclosure(e: Expr, I: Interval, convexity: str = 'convex', check: bool = True,
                 samples: Optional[int] = None) -> Enclosure:
    """
    Midpoint/endpoint bracket of the integral mean for convex (or concave) g.

    Args:
        e: Integrand
        I: Interval
        convexity: 'convex' or 'concave'
        check: Verify the sign of g'' on a sample grid first

    Returns:
        HH enclosure of (1/(b-a)) * integral of g
    """
    if convexity not in ('convex', 'concave'):
        raise ValueError(f"Convexity must be 'convex' or 'concave', got {convexity!r}")
    sign = 1.0 if convexity == 'convex' else -1.0
    # sampled-range whether the sign check ran or was skipped
    if check:
        check_sign(e, I, 2, sign, samples)

    ga, gm, gb = _endpoint_values(e, I)
    ends = 0.5 * (ga + gb)
    lower, upper = (gm, ends) if convexity == 'convex' else (ends, gm)
    if lower > upper and lower - upper > _COLLAPSE_ULPS * _EPS * max(1.0, abs(ends)):
        raise ConvexityError(f"Function is not {convexity} on [{I.a}, {I.b}]")
    return _bracket(lower, upper, HH, SAMPLED if check else ANALYTIC, ends)


def hh_m2_enclosure(e: Expr, I: Interval, r2: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Bracket of the integral mean from the lower second-derivative bound m2"""
    r2 = _prepare(r2, 2, I, inflation)
    ga, gm, gb = _endpoint_values(e, I)
    w2 = I.width ** 2
    lower = gm + r2.m / 24.0 * w2
    upper = 0.5 * (ga + gb) - r2.m / 12.0 * w2
    return _bracket(lower, upper, HH_M2_LOWER, r2.confidence, max(abs(lower), abs(upper)))


def hh_M2_enclosure(e: Expr, I: Interval, r2: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Bracket of the integral mean from the upper second-derivative bound M2"""
    r2 = _prepare(r2, 2, I, inflation)
    ga, gm, gb = _endpoint_values(e, I)
    w2 = I.width ** 2
    lower = 0.5 * (ga + gb) - r2.M / 12.0 * w2
    upper = gm + r2.M / 24.0 * w2
    return _bracket(lower, upper, HH_M2_UPPER, r2.confidence, max(abs(lower), abs(upper)))


def hh_refined_enclosure(e: Expr, I: Interval, r2: DerivativeRange,
                         inflation: Optional[float] = None) -> Enclosure:
    """
    Intersection of the m2 and M2 brackets of the integral mean.

    The tag is that of the narrower component bracket.

    Raises:
        EmptyEnclosureError: the brackets do not overlap
    """
    low_side = hh_m2_enclosure(e, I, r2, inflation)
    high_side = hh_M2_enclosure(e, I, r2, inflation)
    lower = max(low_side.lower, high_side.lower)
    upper = min(low_side.upper, high_side.upper)
    tag = high_side.theorem if high_side.width < low_side.width else low_side.theorem
    return _bracket(lower, upper, tag, low_side.confidence, max(abs(lower), abs(upper)))


def bound_c1(I: Interval, r1: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Defect bound (5/72)(M1 - m1)(b - a)"""
    r1 = _prepare(r1, 1, I, inflation)
    return _symmetric(_c(THM0) * r1.width * I.width, THM0, r1.confidence)


def bound_c2(I: Interval, r2: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Defect bound (1/162)(M2 - m2)(b - a)^2"""
    r2 = _prepare(r2, 2, I, inflation)
    return _symmetric(_c(THM1) * r2.width * I.width ** 2, THM1, r2.confidence)


def bound_c2_coarse(I: Interval, r2: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Defect bound (1/36)(M2 - m2)(b - a)^2"""
    r2 = _prepare(r2, 2, I, inflation)
    return _symmetric(_c(EQ7) * r2.width * I.width ** 2, EQ7, r2.confidence)


def bound_c3(I: Interval, r3: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Defect bound (1/1152)(M3 - m3)(b - a)^3"""
    r3 = _prepare(r3, 3, I, inflation)
    return _symmetric(_c(THM2) * r3.width * I.width ** 3, THM2, r3.confidence)


def c4_enclosure(I: Interval, r4: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Defect enclosure [m4, M4] (b - a)^4 / 2880"""
    r4 = _prepare(r4, 4, I, inflation)
    w4 = I.width ** 4
    return Enclosure(_c(EQ4) * r4.m * w4, _c(EQ4) * r4.M * w4, EQ4, confidence=r4.confidence)


def bound_convex2(e: Expr, I: Interval, check: bool = True, samples: Optional[int] = None) -> Enclosure:
    """
    Two-sided defect bound for convex second derivative:
    0 <= T <= (b - a)^2 / 162 * [(g''(a) + g''(b))/2 - g''(m)].

    Raises:
        ConvexityError: sampled fourth derivative negative somewhere on I
    """
    if check:
        check_sign(e, I, 4, 1.0, samples)
    defect = second_derivative_defect(e, I)
    upper = _c(THM3) * I.width ** 2 * defect
    if upper < 0.0:
        if -upper > _COLLAPSE_ULPS * _EPS * max(1.0, abs(defect)) * I.width ** 2:
            raise ConvexityError(f"Second derivative is not convex on [{I.a}, {I.b}] (midpoint defect {defect!r})")
        upper = 0.0
    return Enclosure(0.0, upper, THM3, confidence=SAMPLED if check else ANALYTIC)


def bound_corrected(I: Interval, r4: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Symmetric enclosure of the corrected defect, radius (11/57600)(M4 - m4)(b - a)^4"""
    r4 = _prepare(r4, 4, I, inflation)
    return _symmetric(_c(THM4) * r4.width * I.width ** 4, THM4, r4.confidence)


def thm4_t_enclosure(e: Expr, I: Interval, r4: DerivativeRange, inflation: Optional[float] = None) -> Enclosure:
    """Corrected-rule bound re-centred as an enclosure of the classical defect T_g"""
    return bound_corrected(I, r4, inflation).shifted(correction_term(e, I))


def quartic_shift_enclosure(e: Expr, I: Interval, r4: DerivativeRange,
                            inflation: Optional[float] = None) -> Enclosure:
    """
    Defect enclosure from the two quartic-shift brackets behind the corrected rule:

        m4 w^4/2880 <= T <= w^2 D/162 - (11/9) m4 w^4/2880
        w^2 D/162 - (11/9) M4 w^4/2880 <= T <= M4 w^4/2880
    """
    r4 = _prepare(r4, 4, I, inflation)
    w = I.width
    q = w ** 4 / 2880.0
    convex_part = _c(THM3) * w ** 2 * second_derivative_defect(e, I)
    lower = max(r4.m * q, convex_part - 11.0 / 9.0 * r4.M * q)
    upper = min(convex_part - 11.0 / 9.0 * r4.m * q, r4.M * q)
    return _bracket(lower, upper, EQ8_9, r4.confidence, max(abs(r4.m), abs(r4.M)) * q)


def majorization_slacks(h: Expr, I: Interval, u: float, v: float):
    """
    Slacks of 2h(m) <= h(u) + h(v) <= h(a) + h(b) for u + v = a + b.

    Returns:
        (left slack, right slack); both non-negative for convex h
    """
    if abs(u + v - (I.a + I.b)) > 1e-12 * max(1.0, abs(I.a) + abs(I.b)):
        raise MajorizationError(f"Points must satisfy u + v = a + b, got u + v = {u + v!r}, a + b = {I.a + I.b!r}")
    for point in (u, v):
        if not I.a - 1e-12 <= point <= I.b + 1e-12:
            raise MajorizationError(f"Point {point!r} lies outside [{I.a}, {I.b}]")
    hu, hv = eval_jet(h, np.array([u, v]), order=0).c0
    ha, hm, hb = _endpoint_values(h, I)
    pair = float(hu + hv)
    return pair - 2.0 * hm, (ha + hb) - pair


def majorization_check(h: Expr, I: Interval, u: float, v: float) -> bool:
    """True iff both majorization inequalities hold with slack >= -1e-12"""
    left, right = majorization_slacks(h, I, u, v)
    return left >= -1e-12 and right >= -1e-12


def _resolve_range(e: Expr, I: Interval, order: int, ranges: Optional[Dict[int, DerivativeRange]],
                   samples: Optional[int]) -> DerivativeRange:
    if ranges and order in ranges:
        return ranges[order]
    return estimate_derivative_range(e, I, order, samples)


def applicable_bounds(e: Expr, I: Interval, smoothness: str,
                      ranges: Optional[Dict[int, DerivativeRange]] = None,
                      inflation: Optional[float] = None, samples: Optional[int] = None,
                      include_corrected: bool = False, check: bool = True) -> List[Enclosure]:
    """
    Every defect enclosure that uses exactly the class's derivative order.

    C1: THM0; C2: THM1, EQ7; C3: THM2; C4: EQ4 (plus THM4 when
    ``include_corrected``); C4-convex2: THM3, THM4.
    """
    cls = parse_smoothness(smoothness)
    order = SMOOTHNESS_ORDER[cls]
    if cls == 'C4-convex2':
        candidates = [bound_convex2(e, I, check=check)]
    else:
        candidates = []
    r = _resolve_range(e, I, order, ranges, samples)

    if cls == 'C1':
        candidates.append(bound_c1(I, r, inflation))
    elif cls == 'C2':
        candidates.extend([bound_c2(I, r, inflation), bound_c2_coarse(I, r, inflation)])
    elif cls == 'C3':
        candidates.append(bound_c3(I, r, inflation))
    elif cls == 'C4':
        candidates.append(c4_enclosure(I, r, inflation))
        if include_corrected:
            candidates.append(thm4_t_enclosure(e, I, r, inflation))
    else:
        candidates.append(thm4_t_enclosure(e, I, r, inflation))
    return candidates


def select_best(candidates: List[Enclosure]) -> Enclosure:
    """Narrowest enclosure; a tie goes to the tag listed later in the tie order"""
    if not candidates:
        raise ValueError("No candidate enclosures")

    def rank(enclosure: Enclosure):
        position = TIE_ORDER.index(enclosure.theorem) if enclosure.theorem in TIE_ORDER else -1
        return (enclosure.width, -position)

    return min(candidates, key=rank)


def best_bound(e: Expr, I: Interval, smoothness: str,
               ranges: Optional[Dict[int, DerivativeRange]] = None,
               inflation: Optional[float] = None, samples: Optional[int] = None,
               include_corrected: bool = False) -> Enclosure:
    """
    Narrowest applicable defect enclosure for the smoothness class.

    Args:
        e: Integrand
        I: Interval
        smoothness: One of C1, C2, C3, C4, C4-convex2 (case-insensitive)
        ranges: Derivative ranges keyed by order; estimated when absent
        inflation: Widening factor for sampled ranges (default 1.05)
        include_corrected: Let THM4 compete for class C4

    Returns:
        Enclosure of T_g(a,b)
    """
    best = select_best(applicable_bounds(e, I, smoothness, ranges, inflation, samples, include_corrected))
    logger.debug(f"Best bound on [{I.a:g}, {I.b:g}] for {smoothness}: {best.theorem} width {best.width!r}")
    return best
