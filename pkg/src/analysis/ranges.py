#!/usr/bin/env python3
"""
Derivative range estimation: m_n and M_n of the n-th derivative over an interval

Extrema come from a Chebyshev-Lobatto grid (endpoints included) followed by one
parabolic refinement step at every interior grid extremum. The estimates are
empirical, so enclosures built from them are labelled "sampled-range".
"""

import logging
from typing import Optional, Tuple

import numpy as np

from ..config import config
from ..errors import RangeOrderError
from ..expr import Expr, eval_jet
from .models import DerivativeRange, Interval

logger = logging.getLogger(__name__)

# Relative movement that marks a range as refined
REFINEMENT_THRESHOLD = 1e-12


def chebyshev_nodes(interval: Interval, samples: int) -> np.ndarray:
    """Chebyshev-Lobatto nodes on the interval, increasing, endpoints exact"""
    j = np.arange(samples)
    nodes = interval.midpoint - 0.5 * interval.width * np.cos(np.pi * j / (samples - 1))
    nodes[0] = interval.a
    nodes[-1] = interval.b
    return nodes


def _parabola_vertices(x: np.ndarray, y: np.ndarray, idx: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vertex abscissae of the parabola through (idx-1, idx, idx+1); mask of accepted ones"""
    x0, x1, x2 = x[idx - 1], x[idx], x[idx + 1]
    y0, y1, y2 = y[idx - 1], y[idx], y[idx + 1]
    num = (x1 - x0) ** 2 * (y1 - y2) - (x1 - x2) ** 2 * (y1 - y0)
    den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0)
    with np.errstate(divide='ignore', invalid='ignore'):
        vertex = x1 - 0.5 * num / den
    accepted = (den != 0.0) & np.isfinite(vertex) & (vertex > x0) & (vertex < x2)
    return vertex, accepted


def _moved(old: float, new: float) -> bool:
    return abs(new - old) > REFINEMENT_THRESHOLD * max(abs(old), np.finfo(float).tiny)


def estimate_derivative_range(e: Expr, I: Interval, n: int, samples: Optional[int] = None,
                              override: Optional[Tuple[float, float]] = None) -> DerivativeRange:
    """
    Estimate the extrema of the n-th derivative of ``e`` over ``I``.

    Args:
        e: Integrand expression
        I: Interval
        n: Derivative order (1..4)
        samples: Grid size (default from configuration, 1025)
        override: Exact (m, M) supplied by the caller; skips sampling

    Returns:
        DerivativeRange with the grid size and whether refinement moved an extremum

    Raises:
        RangeOrderError: n outside 1..4
        EvaluationDomainError: derivative undefined somewhere on the grid
    """
    if n not in (1, 2, 3, 4):
        raise RangeOrderError(f"Derivative order must be in 1..4, got {n}")
    if override is not None:
        m, M = override
        return DerivativeRange.exact(I, n, m, M)

    samples = config.range_samples if samples is None else samples
    if samples < 3:
        raise ValueError(f"Range estimation needs at least 3 samples, got {samples}")

    x = chebyshev_nodes(I, samples)
    y = np.asarray(eval_jet(e, x, order=n).derivative(n))
    m = float(np.min(y))
    M = float(np.max(y))

    interior = np.arange(1, samples - 1)
    left, centre, right = y[interior - 1], y[interior], y[interior + 1]
    minima = interior[(centre < left) & (centre < right)]
    maxima = interior[(centre > left) & (centre > right)]

    refined = False
    candidates = []
    for idx, pick in ((minima, np.min), (maxima, np.max)):
        if idx.size == 0:
            continue
        vertex, accepted = _parabola_vertices(x, y, idx)
        if np.any(accepted):
            candidates.append((vertex[accepted], pick))

    for vertices, pick in candidates:
        values = np.asarray(eval_jet(e, vertices, order=n).derivative(n))
        best = float(pick(values))
        if pick is np.min and best < m:
            refined = refined or _moved(m, best)
            m = best
        elif pick is np.max and best > M:
            refined = refined or _moved(M, best)
            M = best

    logger.debug(f"Range of order {n} on [{I.a:g}, {I.b:g}]: m={m!r} M={M!r} (refined={refined})")
    return DerivativeRange(order=n, interval=I, m=m, M=M, samples=samples, refined=refined)


def estimate_ranges(e: Expr, I: Interval, orders, samples: Optional[int] = None) -> dict:
    """Ranges for several derivative orders at once, keyed by order"""
    return {n: estimate_derivative_range(e, I, n, samples) for n in orders}
