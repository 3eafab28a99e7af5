"""
DEMN Estimation
Cross-domain expected distances, their Monte Carlo oracle and the multinode estimator
"""

from .cross_domain import (
    Arc, Region, CrossDomainCase, RegionAreas, BoundStrategy, UpperBoundModel, case_regions
)
from .expected_distance import (
    expected_distance, expected_distance_m1, expected_distance_m2, region_areas
)
from .monte_carlo import monte_carlo_expected_distance, monte_carlo_region_areas
from .demn import DemnEstimator, demn_estimates

__all__ = [
    'Arc',
    'Region',
    'CrossDomainCase',
    'RegionAreas',
    'BoundStrategy',
    'UpperBoundModel',
    'case_regions',
    'expected_distance',
    'expected_distance_m1',
    'expected_distance_m2',
    'region_areas',
    'monte_carlo_expected_distance',
    'monte_carlo_region_areas',
    'DemnEstimator',
    'demn_estimates'
]
