"""
Monte Carlo Oracle
Rejection sampling over the cross-domain regions, used to validate the quadrature
"""

from typing import Dict, List, Optional
from dataclasses import dataclass

import numpy as np

from ..exceptions import SamplingError
from .cross_domain import CrossDomainCase, Region, RegionAreas, case_regions

MIN_ACCEPTANCE = 1e-3
CHUNK_SIZE = 1 << 20


@dataclass(frozen=True)
class RegionSample:
    """Sampling outcome for one region"""
    name: str
    area: float
    mean_distance: float
    accepted: int
    proposed: int


def _sample_region(region: Region, samples: int, rng: np.random.Generator) -> RegionSample:
    x_lo, x_hi, y_lo, y_hi = region.bounding_box()
    box_area = (x_hi - x_lo) * (y_hi - y_lo)
    accepted = 0
    distance_sum = 0.0
    remaining = samples
    while remaining > 0:
        size = min(remaining, CHUNK_SIZE)
        x = rng.uniform(x_lo, x_hi, size)
        y = rng.uniform(y_lo, y_hi, size)
        inside = region.contains(x, y)
        accepted += int(inside.sum())
        distance_sum += float(np.hypot(x[inside], y[inside]).sum())
        remaining -= size

    if accepted == 0:
        raise SamplingError(f"no samples accepted in region {region.name}")
    rate = accepted / samples
    if rate < MIN_ACCEPTANCE:
        raise SamplingError(
            f"acceptance rate {rate:.2e} in region {region.name} is below {MIN_ACCEPTANCE}"
        )
    return RegionSample(
        name=region.name,
        area=box_area * rate,
        mean_distance=distance_sum / accepted,
        accepted=accepted,
        proposed=samples
    )


def sample_regions(case: CrossDomainCase, samples: int, seed: Optional[int] = None) -> List[RegionSample]:
    """Sample every non-degenerate region with ``samples`` proposals each"""
    if samples <= 0:
        raise SamplingError("no samples requested, nothing can be accepted")
    rng = np.random.default_rng(seed)
    return [_sample_region(r, samples, rng) for r in case_regions(case) if r.width > 0.0]


def monte_carlo_expected_distance(case: CrossDomainCase, samples: int = 1_000_000,
                                  seed: Optional[int] = None) -> float:
    """Sample estimate of the expected distance, combined across regions by area"""
    results = sample_regions(case, samples, seed)
    total_area = sum(r.area for r in results)
    return sum(r.area * r.mean_distance for r in results) / total_area


def monte_carlo_region_areas(case: CrossDomainCase, samples: int = 1_000_000,
                             seed: Optional[int] = None) -> RegionAreas:
    """Sample estimates of the region areas"""
    areas: Dict[str, float] = {r.name: r.area for r in sample_regions(case, samples, seed)}
    return RegionAreas.from_mapping(areas)
