"""
Multi-Objective Optimization
NSGA-II over placements of the unknown nodes
"""

from .nsga2 import dominance_matrix, non_dominated_sort, crowding_distance
from .operators import sbx_crossover, polynomial_mutation
from .solver import GaConfig, Individual, ParetoResult, GeneticSolver, choose_output, run

__all__ = [
    'dominance_matrix',
    'non_dominated_sort',
    'crowding_distance',
    'sbx_crossover',
    'polynomial_mutation',
    'GaConfig',
    'Individual',
    'ParetoResult',
    'GeneticSolver',
    'choose_output',
    'run'
]
