#!/usr/bin/env python3
"""
Value types shared by the analysis modules
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..constants import THEOREM_CONSTANTS
from ..errors import RangeOrderError

# Enclosure confidence labels
ANALYTIC = 'analytic-range'
SAMPLED = 'sampled-range'

# Rule tags
CLASSICAL = 'classical'
CORRECTED = 'corrected'
ORACLE = 'oracle'

SMOOTHNESS_ORDER = {
    'C1': 1,
    'C2': 2,
    'C3': 3,
    'C4': 4,
    'C4-convex2': 4,
}


def parse_smoothness(name: str) -> str:
    """Canonical smoothness tag from user text ('c4-convex2' -> 'C4-convex2')"""
    for tag in SMOOTHNESS_ORDER:
        if tag.lower() == str(name).strip().lower():
            return tag
    raise ValueError(f"Unknown smoothness class: {name!r} (expected one of {', '.join(SMOOTHNESS_ORDER)})")


@dataclass(frozen=True)
class Interval:
    """Closed interval [a, b] with a < b"""
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError(f"Interval endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise ValueError(f"Interval requires a < b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    def contains(self, other: 'Interval', tol: float = 1e-12) -> bool:
        scale = tol * max(1.0, abs(self.a), abs(self.b))
        return other.a >= self.a - scale and other.b <= self.b + scale

    def bisect(self) -> Tuple['Interval', 'Interval']:
        m = self.midpoint
        return Interval(self.a, m), Interval(m, self.b)

    def breakpoints(self, n: int) -> List[float]:
        """n+1 uniform breakpoints with exact endpoints"""
        if n < 1:
            raise ValueError(f"Panel count must be at least 1, got {n}")
        h = self.width / n
        points = [self.a + k * h for k in range(n)] + [self.b]
        return points


@dataclass(frozen=True)
class DerivativeRange:
    """Minimum m and maximum M of the n-th derivative over an interval"""
    order: int
    interval: Interval
    m: float
    M: float
    samples: int = 0
    refined: bool = False
    source: str = 'sampled'  # 'sampled' or 'analytic'

    def __post_init__(self):
        if self.order not in (1, 2, 3, 4):
            raise RangeOrderError(f"Derivative order must be in 1..4, got {self.order}")
        if not self.m <= self.M:
            raise ValueError(f"Derivative range requires m <= M, got m={self.m}, M={self.M}")
        if self.source not in ('sampled', 'analytic'):
            raise ValueError(f"Unknown range source: {self.source!r}")

    @classmethod
    def exact(cls, interval: Interval, order: int, m: float, M: float) -> 'DerivativeRange':
        """User-supplied extrema, bypassing sampling"""
        return cls(order=order, interval=interval, m=float(m), M=float(M), source='analytic')

    @property
    def width(self) -> float:
        return self.M - self.m

    @property
    def is_sampled(self) -> bool:
        return self.source == 'sampled'

    @property
    def confidence(self) -> str:
        return SAMPLED if self.is_sampled else ANALYTIC

    def inflated(self, factor: float) -> 'DerivativeRange':
        """Widen M - m by ``factor`` about its center; analytic ranges are returned unchanged"""
        if not self.is_sampled or factor == 1.0:
            return self
        center = 0.5 * (self.m + self.M)
        half = 0.5 * factor * self.width
        return DerivativeRange(
            order=self.order, interval=self.interval,
            m=min(self.m, center - half), M=max(self.M, center + half),
            samples=self.samples, refined=self.refined, source=self.source,
        )

    def require(self, order: int, interval: Optional[Interval] = None) -> 'DerivativeRange':
        """Check order (and coverage of ``interval``); returns self for chaining"""
        if self.order != order:
            raise RangeOrderError(f"Expected a range of derivative order {order}, got order {self.order}")
        if interval is not None and not self.interval.contains(interval):
            raise ValueError(
                f"Range over [{self.interval.a}, {self.interval.b}] does not cover [{interval.a}, {interval.b}]"
            )
        return self


@dataclass(frozen=True)
class Enclosure:
    """Bracket [lower, upper] with the theorem tag and constant that produced it"""
    lower: float
    upper: float
    theorem: str
    constant: Optional[float] = None
    confidence: str = ANALYTIC

    def __post_init__(self):
        if self.theorem not in THEOREM_CONSTANTS:
            raise ValueError(f"Unknown theorem tag: {self.theorem!r}")
        expected = THEOREM_CONSTANTS[self.theorem]
        if self.constant is None:
            object.__setattr__(self, 'constant', expected)
        elif self.constant != expected:
            raise ValueError(f"Constant {self.constant} does not match {self.theorem} ({expected})")
        if not self.lower <= self.upper:
            raise ValueError(f"Enclosure requires lower <= upper, got [{self.lower}, {self.upper}]")
        if self.confidence not in (ANALYTIC, SAMPLED):
            raise ValueError(f"Unknown confidence label: {self.confidence!r}")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def radius(self) -> float:
        return 0.5 * self.width

    def slack(self, value: float) -> float:
        """Signed distance of ``value`` to the nearer edge; negative when outside"""
        return min(value - self.lower, self.upper - value)

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.slack(value) >= -tol

    def shifted(self, offset: float) -> 'Enclosure':
        return Enclosure(self.lower + offset, self.upper + offset, self.theorem, self.constant, self.confidence)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'lower': self.lower,
            'upper': self.upper,
            'theorem': self.theorem,
            'confidence': self.confidence,
        }


@dataclass(frozen=True)
class PanelResult:
    """One panel of a composite rule: estimate, Simpson defect enclosure and integral enclosure"""
    left: float
    right: float
    rule: str
    estimate: float
    simpson: float
    defect: Enclosure
    enclosure: Enclosure

    @property
    def width(self) -> float:
        return self.right - self.left


@dataclass
class Partition:
    """Ordered panels covering [a, b]"""
    panels: List[PanelResult] = field(default_factory=list)

    def __post_init__(self):
        for previous, current in zip(self.panels, self.panels[1:]):
            if not previous.left < current.left or previous.right != current.left:
                raise ValueError("Partition panels must be contiguous and strictly increasing")

    @property
    def breakpoints(self) -> List[float]:
        if not self.panels:
            return []
        return [p.left for p in self.panels] + [self.panels[-1].right]


@dataclass
class QuadratureResult:
    """Integral estimate with an optional enclosure of the true integral"""
    estimate: float
    enclosure: Optional[Enclosure]
    rule: str
    panels: int
    partition: Optional[Partition] = None
    converged: bool = True
    # Sum of per-panel defect widths, and of panel width times defect width
    # (the integral enclosure width without the cancellation in upper - lower)
    defect_width: Optional[float] = None
    integral_width: Optional[float] = None
    width_history: List[float] = field(default_factory=list)

    def __post_init__(self):
        if self.rule not in (CLASSICAL, CORRECTED, ORACLE):
            raise ValueError(f"Unknown rule tag: {self.rule!r}")
        if self.panels < 1:
            raise ValueError(f"Panel count must be at least 1, got {self.panels}")
