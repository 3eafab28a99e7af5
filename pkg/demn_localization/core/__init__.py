"""
DV-Hop Core
Classic DV-Hop distance estimation, least-squares placement and shared errors
"""

from ..exceptions import (
    LocalizationError, NetworkError, GenerationError, NetworkParseError,
    EstimationError, SolverError, DomainError, NumericError, SamplingError,
    ConfigError, StatisticsError
)
from .dvhop import (
    EstimateSource, DistanceEstimate, AvgHopDistance, avg_hop_distance,
    classic_distance, least_squares_position, estimate_positions
)

__all__ = [
    'LocalizationError',
    'NetworkError',
    'GenerationError',
    'NetworkParseError',
    'EstimationError',
    'SolverError',
    'DomainError',
    'NumericError',
    'SamplingError',
    'ConfigError',
    'StatisticsError',
    'EstimateSource',
    'DistanceEstimate',
    'AvgHopDistance',
    'avg_hop_distance',
    'classic_distance',
    'least_squares_position',
    'estimate_positions'
]
