"""
DEMN Localization
Range-free sensor localization with multinode distance estimation and hop loss
"""

from .network import Network, TopologyShape, generate_network, hop_matrix, load_network, save_network
from .estimation import CrossDomainCase, UpperBoundModel, expected_distance
from .objectives import distance_table
from .optimization import GaConfig, ParetoResult
from .evaluation import ExperimentConfig, ExperimentReport, create_localizer, run_experiment
from .config import ConfigManager

__version__ = "1.0.0"

__all__ = [
    'Network',
    'TopologyShape',
    'generate_network',
    'hop_matrix',
    'load_network',
    'save_network',
    'CrossDomainCase',
    'UpperBoundModel',
    'expected_distance',
    'distance_table',
    'GaConfig',
    'ParetoResult',
    'ExperimentConfig',
    'ExperimentReport',
    'create_localizer',
    'run_experiment',
    'ConfigManager'
]
