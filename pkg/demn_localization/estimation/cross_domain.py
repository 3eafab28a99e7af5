"""
Cross Domain Geometry
Regions constraining an unknown node detected by two anchors

Anchor a_i sits at the origin and the constraining anchor a_j at (d, 0).
Every region is the part of the upper half-plane between two circular arcs
over an x-interval, so areas and distance moments reduce to 1-D integrals.
"""

from typing import Dict, Any, List, Optional, Tuple
from dataclasses import dataclass, field, replace
from enum import Enum
import math

import numpy as np

from ..exceptions import DomainError, ConfigError


@dataclass(frozen=True)
class Arc:
    """Upper half of the circle centred at (center, 0): y = sqrt(r^2 - (x - center)^2)"""
    center: float
    radius: float

    def __call__(self, x):
        return np.sqrt(np.maximum(self.radius ** 2 - (np.asarray(x) - self.center) ** 2, 0.0))

    def height(self, x: float) -> float:
        return math.sqrt(max(self.radius ** 2 - (x - self.center) ** 2, 0.0))

    def max_on(self, lo: float, hi: float) -> float:
        if lo <= self.center <= hi:
            return self.radius
        return max(self.height(lo), self.height(hi))

    def min_on(self, lo: float, hi: float) -> float:
        # concave arc: the minimum is at an endpoint
        return min(self.height(lo), self.height(hi))


@dataclass(frozen=True)
class Region:
    """{(x, y): lo <= x <= hi, lower(x) <= y <= upper(x)}, lower defaulting to the x-axis"""
    name: str
    lo: float
    hi: float
    upper: Arc
    lower: Optional[Arc] = None

    @property
    def width(self) -> float:
        return max(self.hi - self.lo, 0.0)

    def bounding_box(self) -> Tuple[float, float, float, float]:
        """(x_lo, x_hi, y_lo, y_hi)"""
        y_lo = self.lower.min_on(self.lo, self.hi) if self.lower is not None else 0.0
        return self.lo, self.hi, y_lo, self.upper.max_on(self.lo, self.hi)

    def contains(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        floor = self.lower(x) if self.lower is not None else 0.0
        return (x >= self.lo) & (x <= self.hi) & (y >= floor) & (y <= self.upper(x))

    def clipped(self, lo: float) -> 'Region':
        """The part of this region at x >= lo"""
        return replace(self, lo=max(self.lo, lo))


@dataclass(frozen=True)
class CrossDomainCase:
    """
    One anchor pair constraining an unknown node

    d: separation of a_i and a_j; radius: communication radius R;
    m: hop count from a_i; ub: upper bound on the m-hop reach of a_i
    """
    d: float
    radius: float
    m: int
    ub: float

    def __post_init__(self):
        if not (self.d > 0.0 and self.radius > 0.0 and self.ub > 0.0):
            raise DomainError(
                f"d, R and ub must be positive, got d={self.d}, R={self.radius}, ub={self.ub}"
            )
        if self.m not in (1, 2):
            raise DomainError(f"hop count m must be 1 or 2, got {self.m}")
        if not self.d - self.radius < self.ub:
            raise DomainError(
                f"empty cross domain: d - R = {self.d - self.radius} is not below ub = {self.ub}"
            )

    @property
    def crossing(self) -> float:
        """Abscissa where Circle(a_i, ub) meets Circle(a_j, R)"""
        return (self.ub ** 2 + self.d ** 2 - self.radius ** 2) / (2.0 * self.d)

    @property
    def lower_bound(self) -> float:
        return max(0.0, self.d - self.radius)

    def to_dict(self) -> Dict[str, Any]:
        return {'d': self.d, 'radius': self.radius, 'm': self.m, 'ub': self.ub}


def lens_regions(case: CrossDomainCase) -> List[Region]:
    """
    D1 and D2: the upper half of Circle(a_i, ub) intersected with Circle(a_j, R)

    D1 lies under Circle(a_j, R) left of the crossing, D2 under Circle(a_i, ub)
    right of it. When one disk contains the other, the single remaining
    half-disk is returned under its own name.
    """
    d, r, ub = case.d, case.radius, case.ub
    outer_j = Arc(d, r)
    outer_i = Arc(0.0, ub)
    if ub >= d + r:
        return [Region('d1', d - r, d + r, outer_j)]
    if ub <= r - d:
        return [Region('d2', -ub, ub, outer_i)]
    crossing = case.crossing
    return [
        Region('d1', d - r, crossing, outer_j),
        Region('d2', crossing, ub, outer_i),
    ]


def ring_region(case: CrossDomainCase) -> Region:
    """D3: between Circle(a_i, R) and Circle(a_j, R) for x in [d/2, R]"""
    d, r = case.d, case.radius
    return Region('d3', d / 2.0, max(r, d / 2.0), upper=Arc(d, r), lower=Arc(0.0, r))


def case_regions(case: CrossDomainCase) -> List[Region]:
    """
    Region decomposition for the case's hop count

    For m = 1 this is the lens D1 + D2. A two-hop node lies beyond R from a_i,
    so for m = 2 the lens regions keep only x >= R and D3 covers the rest of
    Circle(a_j, R) outside Circle(a_i, R). The three regions are disjoint while
    the crossing lies at or right of R.
    """
    regions = lens_regions(case)
    if case.m == 2:
        regions = [region.clipped(case.radius) for region in regions]
        regions.append(ring_region(case))
    return regions


@dataclass(frozen=True)
class RegionAreas:
    """Areas of the cross-domain regions in square meters"""
    d1: float
    d2: float
    d3: float = 0.0

    @property
    def total(self) -> float:
        return self.d1 + self.d2 + self.d3

    @classmethod
    def from_mapping(cls, areas: Dict[str, float]) -> 'RegionAreas':
        return cls(d1=areas.get('d1', 0.0), d2=areas.get('d2', 0.0), d3=areas.get('d3', 0.0))

    def to_dict(self) -> Dict[str, float]:
        return {'d1': self.d1, 'd2': self.d2, 'd3': self.d3}


class BoundStrategy(Enum):
    HOP_TIMES_RADIUS = "hop_times_radius"
    CUSTOM = "custom"


@dataclass(frozen=True)
class UpperBoundModel:
    """
    Upper bound UB(m) on the distance an anchor reaches in m hops

    The default strategy uses m * R. A custom table maps m to a multiple of R;
    entries must not exceed m and must be non-decreasing in m.
    """
    strategy: BoundStrategy = BoundStrategy.HOP_TIMES_RADIUS
    table: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.strategy is BoundStrategy.CUSTOM:
            if not self.table:
                raise ConfigError("custom upper-bound model needs a table")
            previous = 0.0
            for m in sorted(self.table):
                factor = self.table[m]
                if not 0.0 < factor <= m:
                    raise ConfigError(f"ub({m}) = {factor} R must lie in (0, {m} R]")
                if factor < previous:
                    raise ConfigError("ub must be non-decreasing in m")
                previous = factor

    @classmethod
    def custom(cls, table: Dict[int, float]) -> 'UpperBoundModel':
        return cls(strategy=BoundStrategy.CUSTOM, table={int(k): float(v) for k, v in table.items()})

    def bound(self, m: int, radius: float) -> float:
        if self.strategy is BoundStrategy.HOP_TIMES_RADIUS:
            return m * radius
        if m not in self.table:
            raise ConfigError(f"custom upper-bound table has no entry for m={m}")
        return self.table[m] * radius

    def __call__(self, m: int, radius: float) -> float:
        return self.bound(m, radius)

    def to_dict(self) -> Dict[str, Any]:
        return {'strategy': self.strategy.value, 'table': dict(self.table)}
