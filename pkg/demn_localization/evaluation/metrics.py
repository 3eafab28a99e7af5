"""
Localization Metrics
Normalized localization error, accuracy, performance gain and confidence intervals
"""

from typing import Iterable, Sequence, Tuple, Union
import math

import numpy as np
from scipy import stats

from ..exceptions import StatisticsError
from ..objectives.losses import Placement


def ales(placement: Union[Placement, np.ndarray], ground_truth: np.ndarray, radius: float) -> float:
    """
    Average localization error normalized by the radius, in percent

    100 / (N_u * R) times the summed Euclidean error over all unknown nodes.
    """
    predicted = placement.coords if isinstance(placement, Placement) else np.asarray(placement, dtype=float)
    truth = np.asarray(ground_truth, dtype=float).reshape(-1, 2)
    predicted = predicted.reshape(-1, 2)
    if predicted.shape != truth.shape:
        raise ValueError(f"placement has {predicted.shape[0]} nodes, ground truth {truth.shape[0]}")
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    errors = np.linalg.norm(predicted - truth, axis=1)
    return float(100.0 * errors.sum() / (truth.shape[0] * radius))


def ala(samples: Iterable[float]) -> float:
    """Average localization accuracy: 100 minus the mean ALEs"""
    values = np.asarray(list(samples), dtype=float)
    if values.size == 0:
        raise StatisticsError("no ALEs samples")
    return float(100.0 - values.mean())


def apg(others: Sequence[float], ours: float) -> float:
    """Average performance gain: mean over the other methods of (their mean ALEs - ours)"""
    if len(others) == 0:
        raise StatisticsError("apg needs at least one comparison method")
    return float(np.mean(np.asarray(others, dtype=float) - ours))


def t_quantile(alpha: float, dof: int) -> float:
    """Two-sided Student-t critical value t_{alpha/2}(dof)"""
    return float(stats.t.ppf(1.0 - alpha / 2.0, dof))


def confidence_interval(samples: Sequence[float], alpha: float = 0.05) -> Tuple[float, float]:
    """
    Student-t confidence interval of the mean

    X_bar +/- S / sqrt(n) * t_{alpha/2}(n - 1), with S the sample standard deviation.
    """
    values = np.asarray(samples, dtype=float)
    n = values.size
    if n < 2:
        raise StatisticsError(f"confidence interval needs at least 2 samples, got {n}")
    if not 0.0 < alpha < 1.0:
        raise StatisticsError(f"alpha must lie in (0, 1), got {alpha}")
    mean = float(values.mean())
    half_width = float(values.std(ddof=1)) / math.sqrt(n) * t_quantile(alpha, n - 1)
    return mean - half_width, mean + half_width
