"""
Objectives
Distance table, Euclidean distance loss and hop loss
"""

from .losses import (
    Placement, ObjectiveValues, DistanceTable, ObjectiveEvaluator,
    distance_table, f1, f2, predicted_hops, hop_penalty
)

__all__ = [
    'Placement',
    'ObjectiveValues',
    'DistanceTable',
    'ObjectiveEvaluator',
    'distance_table',
    'f1',
    'f2',
    'predicted_hops',
    'hop_penalty'
]
