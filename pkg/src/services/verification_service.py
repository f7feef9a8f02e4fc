#!/usr/bin/env python3
"""
Verification service layer
Runs the property suites (identities, bound containment, sharpness, coth) and
reports every property with its measured slack
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..analysis import (
    DerivativeRange, Interval, Witness, bound_c1, bound_c2, bound_c2_coarse, bound_c3,
    bound_convex2, bound_corrected, c4_enclosure, closed_form_sharpness, composite_integrate,
    constant_search, corrected_t_functional, coth, coth_mean_bounds, coth_mean_corrected,
    coth_mean_oracle, eq10_pointwise, eq11_corrected_pointwise, eq11_pointwise,
    estimate_derivative_range, hh_enclosure, hh_refined_enclosure, integrate_function,
    majorization_slacks, oracle_integral, quartic_shift_enclosure, sharpness_ratio, simpson_mean,
    t_functional, t_via_representation, thm4_t_enclosure, witness_eval,
)
from ..analysis.extremal import ORACLE_METHOD
from ..config import config
from ..constants import (
    A_INTERVAL, CORPUS_DOMAIN, CORPUS_MIN_WIDTH, MONOTONE_CORPUS, SEARCH_BRACKETS, SMOOTH_CORPUS,
)
from ..errors import ConvexityError
from ..expr import Const, Expr, Sub, Var, eval_jet, parse, polynomial, substitute
from ..utils import ordered_map

logger = logging.getLogger(__name__)

SUITES = ['representations', 'bounds', 'sharpness', 'coth']

# Grid for corpus members without endpoint-exact ranges: dense, refined, not inflated
DENSE_SAMPLES = 4097

CONTAINMENT_TOL = 1e-10
REPRESENTATION_TOL = 1e-8


@dataclass(frozen=True)
class PropertyResult:
    """One checked property; ``slack`` is the margin to failure (negative when failed)"""
    name: str
    passed: bool
    slack: float

    @classmethod
    def from_slack(cls, name: str, slack: float) -> 'PropertyResult':
        slack = float(slack)
        return cls(name=name, passed=bool(slack >= 0.0), slack=slack)

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'pass': self.passed, 'slack': self.slack}


def _scaled(slack: float, scale: float) -> float:
    return slack / max(1.0, abs(scale))


class VerificationService:
    """High-level service running the verification suites"""

    def __init__(self, seed: Optional[int] = None, threads: Optional[int] = None,
                 intervals: Optional[int] = None, search_trials: Optional[int] = None):
        self.seed = config.seed if seed is None else seed
        self.threads = threads
        self.intervals = config.verify_intervals if intervals is None else intervals
        self.search_trials = config.search_trials if search_trials is None else search_trials
        self.corpus = [parse(source) for source in SMOOTH_CORPUS]

    def run(self, suite: str = 'all') -> List[PropertyResult]:
        """
        Run one suite, or all of them in a fixed order.

        Args:
            suite: representations, bounds, sharpness, coth or all

        Returns:
            Property results in a deterministic order
        """
        runners: Dict[str, Callable[[], List[PropertyResult]]] = {
            'representations': self.verify_representations,
            'bounds': self.verify_bounds,
            'sharpness': self.verify_sharpness,
            'coth': self.verify_coth,
        }
        if suite == 'all':
            names = SUITES
        elif suite in runners:
            names = [suite]
        else:
            raise ValueError(f"Unknown suite: {suite!r} (expected one of {', '.join(SUITES + ['all'])})")

        results = []
        for name in names:
            logger.info(f"Running {name} suite")
            suite_results = runners[name]()
            failed = [r.name for r in suite_results if not r.passed]
            if failed:
                logger.warning(f"{name} suite: {len(failed)} failing properties: {', '.join(failed)}")
            results.extend(suite_results)
        return results

    # ------------------------------------------------------------------ helpers

    def _rng(self, stream: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, stream])

    def _corpus_intervals(self, stream: int) -> List[Tuple[int, Interval]]:
        """(corpus index, interval) pairs drawn inside the corpus domain"""
        rng = self._rng(stream)
        low, high = CORPUS_DOMAIN
        pairs = []
        for index in range(len(self.corpus)):
            for _ in range(self.intervals):
                a = rng.uniform(low, high - CORPUS_MIN_WIDTH)
                b = rng.uniform(a + CORPUS_MIN_WIDTH, high)
                pairs.append((index, Interval(float(a), float(b))))
        return pairs

    # ---------------------------------------------------------- representations

    def verify_representations(self) -> List[PropertyResult]:
        """Integral representations, cubic exactness, translation, scaling and corrected-rule exactness"""
        pairs = self._corpus_intervals(stream=1)

        def errors(item: Tuple[int, Interval]) -> List[float]:
            index, I = item
            e = self.corpus[index]
            t = t_functional(e, I)
            return [abs(t_via_representation(e, I, k) - t) / (1.0 + abs(t)) for k in (1, 2, 3)]

        table = np.array(ordered_map(errors, pairs, self.threads))
        results = [
            PropertyResult.from_slack(f"representation_order_{k}", REPRESENTATION_TOL - float(np.max(table[:, k - 1])))
            for k in (1, 2, 3)
        ]

        rng = self._rng(2)
        worst_cubic = 0.0
        worst_shift = 0.0
        for _ in range(50):
            coefficients = rng.uniform(-10.0, 10.0, 4)
            a = float(rng.uniform(-5.0, 5.0))
            I = Interval(a, a + float(rng.uniform(0.1, 10.0)))
            e = polynomial(coefficients)
            scale = max(1.0, float(np.max(np.abs(coefficients))) * max(abs(I.a), abs(I.b)) ** 3)
            worst_cubic = max(worst_cubic, abs(t_functional(e, I)) / scale)

            g = self.corpus[int(rng.integers(len(self.corpus)))]
            low, high = CORPUS_DOMAIN
            a = float(rng.uniform(low, high - CORPUS_MIN_WIDTH))
            J = Interval(a, float(rng.uniform(a + CORPUS_MIN_WIDTH, high)))
            c = float(rng.uniform(-3.0, 3.0))
            shifted = substitute(g, Sub(Var(), Const(c)))
            base = t_functional(g, J)
            moved = t_functional(shifted, Interval(J.a + c, J.b + c))
            worst_shift = max(worst_shift, abs(moved - base) / max(1.0, abs(simpson_mean(g, J))))

        results.append(PropertyResult.from_slack("cubic_exactness", 1e-12 - worst_cubic))
        results.append(PropertyResult.from_slack("translation_invariance", 1e-10 - worst_shift))

        quartic = parse('t^4')
        worst_scaling = max(
            abs(t_functional(quartic, Interval(0.0, h)) - h ** 4 / 120.0) / (h ** 4 / 120.0)
            for h in (2.0 ** p for p in range(-4, 5))
        )
        results.append(PropertyResult.from_slack("quartic_scaling_law", 1e-12 - worst_scaling))

        worst_corrected = 0.0
        for _ in range(20):
            coefficients = rng.uniform(-10.0, 10.0, 6)
            a = float(rng.uniform(-2.0, 2.0))
            I = Interval(a, a + float(rng.uniform(0.1, 2.0)))
            e = polynomial(coefficients)
            scale = max(1.0, float(np.max(np.abs(coefficients))) * max(abs(I.a), abs(I.b)) ** 5)
            worst_corrected = max(worst_corrected, abs(corrected_t_functional(e, I)) / scale)
        results.append(PropertyResult.from_slack("corrected_quintic_exactness", 1e-12 - worst_corrected))
        return results

    # ------------------------------------------------------------------- bounds

    def corpus_ranges(self, index: int, I: Interval) -> Dict[int, DerivativeRange]:
        """
        Derivative ranges of orders 1..4 for a corpus member.

        Members of MONOTONE_CORPUS get exact endpoint ranges (analytic-range); the
        rest are sampled on the dense grid.
        """
        e = self.corpus[index]
        if SMOOTH_CORPUS[index] not in MONOTONE_CORPUS:
            return {n: estimate_derivative_range(e, I, n, DENSE_SAMPLES) for n in (1, 2, 3, 4)}
        jet = eval_jet(e, np.array([I.a, I.b]))
        ranges = {}
        for n in (1, 2, 3, 4):
            ends = np.asarray(jet.derivative(n), dtype=float)
            ranges[n] = DerivativeRange.exact(I, n, float(np.min(ends)), float(np.max(ends)))
        return ranges

    def _bound_slacks(self, item: Tuple[int, Interval]) -> Dict[str, float]:
        index, I = item
        e = self.corpus[index]
        t = t_functional(e, I)
        ranges = self.corpus_ranges(index, I)
        slacks = {
            'THM0': bound_c1(I, ranges[1], inflation=1.0).slack(t),
            'THM1': bound_c2(I, ranges[2], inflation=1.0).slack(t),
            'EQ7': bound_c2_coarse(I, ranges[2], inflation=1.0).slack(t),
            'THM2': bound_c3(I, ranges[3], inflation=1.0).slack(t),
            'EQ4': c4_enclosure(I, ranges[4], inflation=1.0).slack(t),
        }
        slacks = {tag: _scaled(value, t) for tag, value in slacks.items()}

        mean = oracle_integral(e, I) / I.width
        slacks['HH-refined'] = _scaled(hh_refined_enclosure(e, I, ranges[2], inflation=1.0).slack(mean), mean)

        convex = ranges[2].m >= 0.0
        concave = ranges[2].M <= 0.0
        if convex or concave:
            try:
                hh = hh_enclosure(e, I, 'convex' if convex else 'concave', check=False)
                slacks['HH'] = _scaled(hh.slack(mean), mean)
            except ConvexityError as exc:
                logger.warning(f"Skipping HH for {SMOOTH_CORPUS[index]} on [{I.a}, {I.b}]: {exc}")
            if convex:
                u = I.a + 0.3 * I.width
                slacks['majorization'] = min(majorization_slacks(e, I, u, I.a + I.b - u))

        if ranges[4].m >= 0.0:
            try:
                slacks['THM3'] = _scaled(bound_convex2(e, I, check=False).slack(t), t)
            except ConvexityError as exc:
                logger.warning(f"Skipping THM3 for {SMOOTH_CORPUS[index]} on [{I.a}, {I.b}]: {exc}")
            corrected = corrected_t_functional(e, I)
            slacks['THM4'] = _scaled(bound_corrected(I, ranges[4], inflation=1.0).slack(corrected), corrected)
            slacks['THM4-recentred'] = _scaled(thm4_t_enclosure(e, I, ranges[4], inflation=1.0).slack(t), t)
        slacks['EQ8-9'] = _scaled(quartic_shift_enclosure(e, I, ranges[4], inflation=1.0).slack(t), t)
        return slacks

    def verify_bounds(self) -> List[PropertyResult]:
        """Containment of the defect in every applicable enclosure, plus constant ratios and decay laws"""
        pairs = self._corpus_intervals(stream=3)
        per_pair = ordered_map(self._bound_slacks, pairs, self.threads)

        tags = ['THM0', 'THM1', 'EQ7', 'THM2', 'EQ4', 'THM3', 'THM4', 'THM4-recentred', 'EQ8-9',
                'HH', 'HH-refined', 'majorization']
        results = []
        for tag in tags:
            values = [slacks[tag] for slacks in per_pair if tag in slacks]
            if values:
                results.append(PropertyResult.from_slack(f"containment_{tag}", min(values) + CONTAINMENT_TOL))

        exp_t = parse('exp(t)')
        unit = Interval(0.0, 1.0)
        r2 = DerivativeRange.exact(unit, 2, 1.0, math.e)
        ratio = bound_c2_coarse(unit, r2).width / bound_c2(unit, r2).width
        results.append(PropertyResult.from_slack("eq7_to_thm1_ratio", 1e-12 - abs(ratio / 4.5 - 1.0)))

        plain = hh_enclosure(exp_t, unit, 'convex')
        refined = hh_refined_enclosure(exp_t, unit, r2)
        results.append(PropertyResult.from_slack("hh_refinement_narrower", 1.0 - refined.width / plain.width))

        results.extend(self._decay_properties(exp_t, unit))
        return results

    def _decay_properties(self, e: Expr, I: Interval) -> List[PropertyResult]:
        """Integral enclosure width decays as N^-k with global ranges (defect width as N^-(k-1))"""
        results = []
        for smoothness, k in (('C2', 2), ('C3', 3)):
            ranges = {k: estimate_derivative_range(e, I, k)}
            single = composite_integrate(e, I, 1, smoothness=smoothness, ranges=ranges, threads=self.threads)
            worst_integral = 0.0
            worst_defect = 0.0
            for n in (2, 4, 8, 16):
                result = composite_integrate(e, I, n, smoothness=smoothness, ranges=ranges, threads=self.threads)
                worst_integral = max(worst_integral, abs(result.integral_width * n ** k / single.integral_width - 1.0))
                worst_defect = max(worst_defect, abs(result.defect_width * n ** (k - 1) / single.defect_width - 1.0))
            results.append(PropertyResult.from_slack(f"decay_{smoothness}_integral", 1e-12 - worst_integral))
            results.append(PropertyResult.from_slack(f"decay_{smoothness}_defect", 1e-12 - worst_defect))
        return results

    # ---------------------------------------------------------------- sharpness

    def verify_sharpness(self) -> List[PropertyResult]:
        """Witness ratios, knot continuity and the empirical constant search"""
        results = []

        worst = 0.0
        for a in (2.0, 10.0, 100.0):
            expected = closed_form_sharpness(a)
            for method in ('analytic', ORACLE_METHOD):
                worst = max(worst, abs(sharpness_ratio(Witness.D_FUNCTION, a, method) / expected - 1.0))
        results.append(PropertyResult.from_slack("d_function_closed_form", 1e-10 - worst))

        limit = sharpness_ratio(Witness.D_FUNCTION, 1000.0)
        lower = (1.0 - 3e-6) / 1152.0
        results.append(PropertyResult.from_slack("d_function_limit", min(limit - lower, 1.0 / 1152.0 - limit)))

        jump = 0.0
        for knot in (-1.0, 1.0):
            for order in range(4):
                below = witness_eval(Witness.D_FUNCTION, math.nextafter(knot, -math.inf), order)
                above = witness_eval(Witness.D_FUNCTION, math.nextafter(knot, math.inf), order)
                jump = max(jump, abs(above - below))
        results.append(PropertyResult.from_slack("d_function_knot_continuity", 1e-12 - jump))

        abs_ratio = sharpness_ratio(Witness.ABS_CUBIC, 1.0)
        abs_error = abs(abs_ratio / float(A_INTERVAL[0]) - 1.0)
        results.append(PropertyResult.from_slack("abs_cubic_ratio", 1e-12 - abs_error))
        results.append(PropertyResult.from_slack("x4_eq4_tight", 1e-12 - abs(sharpness_ratio(Witness.X4, 1.0) - 1.0)))
        results.append(PropertyResult.from_slack("x5_eq4_half", 1e-12 - abs(sharpness_ratio(Witness.X5, 1.0) - 0.5)))

        for smoothness in ('C2', 'C1'):
            report = constant_search(smoothness, seed=self.seed, trials=self.search_trials, threads=self.threads)
            known_lower, known_upper = SEARCH_BRACKETS[smoothness]
            results.append(PropertyResult.from_slack(
                f"search_{smoothness}_upper", float(known_upper) + 1e-10 - report.best_ratio))
            if known_lower is not None:
                results.append(PropertyResult.from_slack(
                    f"search_{smoothness}_lower", report.best_ratio - float(known_lower) + 1e-12))
        return results

    # --------------------------------------------------------------------- coth

    def verify_coth(self) -> List[PropertyResult]:
        """Pointwise brackets, integrated brackets against the oracle, and their consistency"""
        results = []
        grid = np.logspace(-3.0, 1.0, 1000)
        values = coth(grid) / grid
        lower, upper = eq11_pointwise(grid)
        results.append(PropertyResult.from_slack(
            "eq11_pointwise", float(np.min(np.minimum(values - lower, upper - values))) + 1e-12))

        # below t = 0.1 the radius drops under the rounding error of the centre
        coarse = grid[grid >= 0.1]
        center, radius = eq11_corrected_pointwise(coarse)
        results.append(PropertyResult.from_slack(
            "eq11_corrected_pointwise", float(np.min(radius - np.abs(coth(coarse) / coarse - center))) + 1e-12))

        sinc = np.sinh(2.0 * grid) / (2.0 * grid)
        low10, high10 = eq10_pointwise(grid)
        results.append(PropertyResult.from_slack(
            "eq10_pointwise", float(np.min(np.minimum((sinc - low10) / sinc, (high10 - sinc) / sinc))) + 1e-12))

        worst5 = math.inf
        worst6 = math.inf
        for y, x in ((0.5, 1.0), (1.0, 2.0), (0.1, 0.2)):
            mean = coth_mean_oracle(y, x)
            bracket = coth_mean_bounds(y, x)
            disc = coth_mean_corrected(y, x)
            worst5 = min(worst5, mean - bracket.lower, bracket.upper - mean)
            worst6 = min(worst6, disc.corrected_radius - abs(mean - disc.corrected))
        results.append(PropertyResult.from_slack("coth_mean_bracket", worst5 + 1e-12))
        results.append(PropertyResult.from_slack("coth_mean_corrected", worst6 + 1e-12))

        worst_integrated = 0.0
        for y, x in ((0.5, 1.0), (1.0, 2.0), (0.1, 0.2), (2.0, 5.0)):
            low = integrate_function(lambda t: eq11_pointwise(t)[0], y, x) / (x - y)
            high = integrate_function(lambda t: eq11_pointwise(t)[1], y, x) / (x - y)
            bracket = coth_mean_bounds(y, x)
            worst_integrated = max(worst_integrated, abs(low - bracket.lower), abs(high - bracket.upper))
        results.append(PropertyResult.from_slack("eq11_integrated_consistency", 1e-10 - worst_integrated))

        worst_width = math.inf
        for x in np.linspace(0.15, 1.0, 18):
            for d in (0.1, 0.05, 0.01):
                y = float(x) - d
                if y <= 0.0:
                    continue
                worst_width = min(worst_width, coth_mean_bounds(y, float(x)).width - 2.0 * coth_mean_corrected(y, float(x)).corrected_radius)
        results.append(PropertyResult.from_slack("corrected_disc_narrower", worst_width))
        return results
