#!/usr/bin/env python3
"""
Composite rules: panel-wise Simpson (classical or corrected) with certified
enclosures of the integral, over uniform or adaptive partitions
"""

import heapq
import logging
import math
from collections import Counter
from typing import Dict, List, Optional

from ..config import config
from ..expr import Expr
from ..utils import ordered_map
from .bounds import best_bound
from .models import (
    ANALYTIC, CLASSICAL, CORRECTED, SAMPLED, SMOOTHNESS_ORDER,
    DerivativeRange, Enclosure, Interval, PanelResult, Partition, QuadratureResult,
    parse_smoothness,
)
from .ranges import estimate_derivative_range
from .simpson import corrected_simpson, simpson_estimate

logger = logging.getLogger(__name__)


def _check_rule(rule: str) -> str:
    rule = str(rule).lower()
    if rule not in (CLASSICAL, CORRECTED):
        raise ValueError(f"Unknown rule: {rule!r} (expected classical or corrected)")
    return rule


def integral_enclosure(simpson: float, width: float, defect: Enclosure) -> Enclosure:
    """Defect enclosure -> integral enclosure: integral = width * (Simpson mean - T)"""
    return Enclosure(
        simpson - width * defect.upper,
        simpson - width * defect.lower,
        defect.theorem,
        confidence=defect.confidence,
    )


class PanelEvaluator:
    """Evaluates single panels for one integrand, rule and smoothness class"""

    def __init__(self, e: Expr, rule: str, smoothness: str,
                 ranges: Optional[Dict[int, DerivativeRange]] = None,
                 inflation: Optional[float] = None, samples: Optional[int] = None):
        self.e = e
        self.rule = _check_rule(rule)
        self.smoothness = parse_smoothness(smoothness)
        self.ranges = ranges
        self.inflation = inflation
        self.samples = samples

    def __call__(self, panel: Interval) -> PanelResult:
        simpson = simpson_estimate(self.e, panel)
        estimate = simpson if self.rule == CLASSICAL else corrected_simpson(self.e, panel)
        defect = best_bound(
            self.e, panel, self.smoothness,
            ranges=self.ranges, inflation=self.inflation, samples=self.samples,
            include_corrected=self.rule == CORRECTED,
        )
        return PanelResult(
            left=panel.a, right=panel.b, rule=self.rule,
            estimate=estimate, simpson=simpson,
            defect=defect, enclosure=integral_enclosure(simpson, panel.width, defect),
        )


def global_ranges(e: Expr, I: Interval, smoothness: str,
                  samples: Optional[int] = None) -> Dict[int, DerivativeRange]:
    """Derivative range over the whole interval for the class's order"""
    order = SMOOTHNESS_ORDER[parse_smoothness(smoothness)]
    return {order: estimate_derivative_range(e, I, order, samples)}


def summarize(panels: List[PanelResult], rule: str, converged: bool = True,
              width_history: Optional[List[float]] = None) -> QuadratureResult:
    """Sum panel estimates and enclosures (exactly rounded sums, so order-independent)"""
    estimate = math.fsum(p.estimate for p in panels)
    lower = math.fsum(p.enclosure.lower for p in panels)
    upper = math.fsum(p.enclosure.upper for p in panels)
    theorem = Counter(p.enclosure.theorem for p in panels).most_common(1)[0][0]
    confidence = SAMPLED if any(p.enclosure.confidence == SAMPLED for p in panels) else ANALYTIC
    return QuadratureResult(
        estimate=estimate,
        enclosure=Enclosure(lower, upper, theorem, confidence=confidence),
        rule=rule,
        panels=len(panels),
        partition=Partition(list(panels)),
        converged=converged,
        defect_width=math.fsum(p.defect.width for p in panels),
        integral_width=math.fsum(p.width * p.defect.width for p in panels),
        width_history=list(width_history or []),
    )


def composite_integrate(e: Expr, I: Interval, n_panels: int, rule: str = CLASSICAL,
                        smoothness: str = 'C2', reuse_global_ranges: bool = False,
                        ranges: Optional[Dict[int, DerivativeRange]] = None,
                        inflation: Optional[float] = None, samples: Optional[int] = None,
                        threads: Optional[int] = None) -> QuadratureResult:
    """
    Uniform composite rule with a certified enclosure of the integral.

    Args:
        e: Integrand
        I: Interval
        n_panels: Number of equal panels (>= 1)
        rule: 'classical' or 'corrected'
        smoothness: Smoothness class selecting the bound family
        reuse_global_ranges: Estimate the derivative range once over I instead of per panel
        ranges: Caller-supplied ranges over I (implies reuse)
        inflation: Widening factor for sampled ranges
        samples: Range estimation grid size
        threads: Worker threads for panel evaluation

    Returns:
        QuadratureResult with the partition attached
    """
    if n_panels < 1:
        raise ValueError(f"Panel count must be at least 1, got {n_panels}")
    rule = _check_rule(rule)
    if ranges is None and reuse_global_ranges:
        ranges = global_ranges(e, I, smoothness, samples)

    points = I.breakpoints(n_panels)
    panels = [Interval(left, right) for left, right in zip(points, points[1:])]
    evaluator = PanelEvaluator(e, rule, smoothness, ranges, inflation, samples)
    results = ordered_map(evaluator, panels, threads)

    logger.info(f"Composite {rule} rule on [{I.a}, {I.b}] with {n_panels} panels")
    return summarize(results, rule)


def adaptive_integrate(e: Expr, I: Interval, tol: Optional[float] = None, rule: str = CLASSICAL,
                       smoothness: str = 'C2', max_panels: Optional[int] = None,
                       reuse_global_ranges: bool = False,
                       ranges: Optional[Dict[int, DerivativeRange]] = None,
                       inflation: Optional[float] = None, samples: Optional[int] = None,
                       threads: Optional[int] = None) -> QuadratureResult:
    """
    Bisect the panel with the widest integral enclosure until the total width is
    at most ``tol`` or the panel cap is reached.

    Ties go to the leftmost panel. When the cap is hit the partial result is
    returned with ``converged=False``.
    """
    tol = config.tolerance if tol is None else tol
    max_panels = config.max_panels if max_panels is None else max_panels
    if not tol > 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    if max_panels < 1:
        raise ValueError(f"Panel cap must be at least 1, got {max_panels}")
    rule = _check_rule(rule)
    if ranges is None and reuse_global_ranges:
        ranges = global_ranges(e, I, smoothness, samples)

    evaluator = PanelEvaluator(e, rule, smoothness, ranges, inflation, samples)
    first = evaluator(I)
    panels = {first.left: first}
    heap = [(-first.enclosure.width, first.left)]
    total = first.enclosure.width
    history = [total]
    converged = True

    while True:
        if total <= tol:
            total = math.fsum(p.enclosure.width for p in panels.values())
            if total <= tol:
                break
        if len(panels) >= max_panels:
            logger.warning(f"Panel cap {max_panels} reached with total width {total!r} > {tol!r}")
            converged = False
            break

        _, left = heapq.heappop(heap)
        parent = panels.pop(left)
        midpoint = 0.5 * (parent.left + parent.right)
        if not parent.left < midpoint < parent.right:
            logger.warning(f"Panel [{parent.left!r}, {parent.right!r}] cannot be bisected further")
            panels[parent.left] = parent
            converged = False
            break

        children = ordered_map(evaluator, [Interval(parent.left, midpoint), Interval(midpoint, parent.right)], threads)
        for child in children:
            panels[child.left] = child
            heapq.heappush(heap, (-child.enclosure.width, child.left))
        total += children[0].enclosure.width + children[1].enclosure.width - parent.enclosure.width
        history.append(total)
        logger.debug(f"Bisected [{parent.left!r}, {parent.right!r}]; {len(panels)} panels, width {total!r}")

    ordered = [panels[key] for key in sorted(panels)]
    logger.info(f"Adaptive {rule} rule on [{I.a}, {I.b}]: {len(ordered)} panels, converged={converged}")
    return summarize(ordered, rule, converged, history)
