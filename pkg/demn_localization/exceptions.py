"""
Localization Errors
Exception hierarchy shared by every stage of the pipeline
"""


class LocalizationError(ValueError):
    """Base class for all localization errors"""


class NetworkError(LocalizationError):
    """Network violates a structural invariant"""


class GenerationError(NetworkError):
    """Synthetic network could not be generated"""


class NetworkParseError(NetworkError):
    """Network file is malformed"""


class EstimationError(LocalizationError):
    """Distance estimate cannot be produced for a pair"""


class SolverError(LocalizationError):
    """Position solver failed (too few anchors or singular system)"""


class DomainError(LocalizationError):
    """Cross-domain case outside the regime of the expectation formula"""


class NumericError(LocalizationError):
    """Numerical quadrature did not converge"""


class SamplingError(LocalizationError):
    """Monte Carlo sampling accepted too few points"""


class ConfigError(LocalizationError):
    """Invalid solver or experiment configuration"""


class StatisticsError(LocalizationError):
    """Statistic undefined for the given samples"""
