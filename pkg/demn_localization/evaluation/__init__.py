"""
Evaluation
Metrics, localization methods, parallel repeats and the benchmark runner
"""

from .metrics import ales, ala, apg, confidence_interval, t_quantile
from .methods import (
    LocalizationResult, BaseLocalizer, DvHopLocalizer,
    GeneticLocalizer, available_methods, create_localizer
)
from .task_distributor import RepeatTask, TaskResult, TaskDistributor
from .experiment_runner import (
    ExperimentConfig, ExperimentReport, cell_seed, build_tasks, run_experiment
)

__all__ = [
    'ales',
    'ala',
    'apg',
    'confidence_interval',
    't_quantile',
    'LocalizationResult',
    'BaseLocalizer',
    'DvHopLocalizer',
    'GeneticLocalizer',
    'available_methods',
    'create_localizer',
    'RepeatTask',
    'TaskResult',
    'TaskDistributor',
    'ExperimentConfig',
    'ExperimentReport',
    'cell_seed',
    'build_tasks',
    'run_experiment'
]
