"""
Genetic Operators
Bounded simulated binary crossover and polynomial mutation for real-coded genes
"""

from typing import Tuple

import numpy as np

EPS = 1e-14


def _spread_factor(beta: np.ndarray, u: np.ndarray, eta: float) -> np.ndarray:
    alpha = 2.0 - beta ** -(eta + 1.0)
    low = u <= 1.0 / alpha
    betaq = np.empty_like(u)
    betaq[low] = (u[low] * alpha[low]) ** (1.0 / (eta + 1.0))
    betaq[~low] = (1.0 / (2.0 - u[~low] * alpha[~low])) ** (1.0 / (eta + 1.0))
    return betaq


def sbx_crossover(parent1: np.ndarray, parent2: np.ndarray,
                  lower: np.ndarray, upper: np.ndarray, eta: float,
                  rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Simulated binary crossover with bound-aware spread

    Each gene crosses with probability 0.5; the two children of a crossed
    gene are swapped with probability 0.5.
    """
    child1 = parent1.copy()
    child2 = parent2.copy()
    genes = parent1.shape[0]
    crossing = (rng.random(genes) <= 0.5) & (np.abs(parent1 - parent2) > EPS)
    u = rng.random(genes)
    swap = rng.random(genes) <= 0.5
    if not crossing.any():
        return child1, child2

    idx = np.flatnonzero(crossing)
    y1 = np.minimum(parent1[idx], parent2[idx])
    y2 = np.maximum(parent1[idx], parent2[idx])
    lo, hi, ui = lower[idx], upper[idx], u[idx]
    gap = y2 - y1

    betaq = _spread_factor(1.0 + 2.0 * (y1 - lo) / gap, ui, eta)
    c1 = np.clip(0.5 * ((y1 + y2) - betaq * gap), lo, hi)
    betaq = _spread_factor(1.0 + 2.0 * (hi - y2) / gap, ui, eta)
    c2 = np.clip(0.5 * ((y1 + y2) + betaq * gap), lo, hi)

    flip = swap[idx]
    child1[idx] = np.where(flip, c2, c1)
    child2[idx] = np.where(flip, c1, c2)
    return child1, child2


def polynomial_mutation(genes: np.ndarray, lower: np.ndarray, upper: np.ndarray,
                        pm: float, eta: float, rng: np.random.Generator) -> np.ndarray:
    """Bounded polynomial mutation, each gene mutated with probability ``pm``"""
    mutated = genes.copy()
    mutate = rng.random(genes.shape[0]) < pm
    u = rng.random(genes.shape[0])
    idx = np.flatnonzero(mutate & (upper > lower))
    if idx.size == 0:
        return mutated

    y, lo, hi, ui = genes[idx], lower[idx], upper[idx], u[idx]
    span = hi - lo
    delta1 = (y - lo) / span
    delta2 = (hi - y) / span
    power = 1.0 / (eta + 1.0)

    deltaq = np.empty_like(y)
    low = ui < 0.5
    val = 2.0 * ui[low] + (1.0 - 2.0 * ui[low]) * (1.0 - delta1[low]) ** (eta + 1.0)
    deltaq[low] = val ** power - 1.0
    high = ~low
    val = 2.0 * (1.0 - ui[high]) + 2.0 * (ui[high] - 0.5) * (1.0 - delta2[high]) ** (eta + 1.0)
    deltaq[high] = 1.0 - val ** power

    mutated[idx] = np.clip(y + deltaq * span, lo, hi)
    return mutated
