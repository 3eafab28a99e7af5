"""
Non-Dominated Sorting
Pareto fronts and crowding distances for minimization problems
"""

from typing import List, Sequence

import numpy as np


def dominance_matrix(points: np.ndarray) -> np.ndarray:
    """dominates[i, j] is True when point i dominates point j (minimization)"""
    no_worse = np.all(points[:, None, :] <= points[None, :, :], axis=2)
    better = np.any(points[:, None, :] < points[None, :, :], axis=2)
    return no_worse & better


def non_dominated_sort(points: Sequence[Sequence[float]]) -> List[List[int]]:
    """
    Fast non-dominated sorting

    Returns fronts as lists of indices into ``points``; front 0 holds the
    non-dominated points, front r the points dominated only by earlier fronts.
    Indices inside a front are in ascending order.
    """
    points = np.asarray(points, dtype=float)
    if points.size == 0:
        return []
    if points.ndim == 1:
        points = points[:, None]

    dominates = dominance_matrix(points)
    dominated_by = dominates.sum(axis=0)
    remaining = np.ones(points.shape[0], dtype=bool)
    fronts = []
    while remaining.any():
        current = np.flatnonzero(remaining & (dominated_by == 0))
        fronts.append([int(i) for i in current])
        remaining[current] = False
        dominated_by = dominated_by - dominates[current].sum(axis=0)
    return fronts


def crowding_distance(front: Sequence[Sequence[float]]) -> List[float]:
    """
    Crowding distance of every point in one front

    Boundary points of each objective get infinity; interior points sum the
    normalized gap between their neighbours over all objectives.
    """
    points = np.asarray(front, dtype=float)
    if points.size == 0:
        return []
    if points.ndim == 1:
        points = points[:, None]
    size, n_objectives = points.shape
    distances = np.zeros(size)
    if size <= 2:
        return [float('inf')] * size

    for m in range(n_objectives):
        order = np.argsort(points[:, m], kind='stable')
        values = points[order, m]
        distances[order[0]] = np.inf
        distances[order[-1]] = np.inf
        span = values[-1] - values[0]
        if span <= 0.0:
            continue
        distances[order[1:-1]] += (values[2:] - values[:-2]) / span
    return [float(d) for d in distances]
