"""
Classic DV-Hop
Average hop distance, hop-based distance estimates and least-squares placement
"""

from typing import Dict, Any, Iterable, List, Optional, Tuple
from dataclasses import dataclass, asdict
from enum import Enum
import logging

import numpy as np

from ..network.topology import Network
from ..network.hops import HopMatrix, UNREACHABLE
from ..exceptions import EstimationError, SolverError

logger = logging.getLogger(__name__)


class EstimateSource(Enum):
    """Estimator that produced a distance"""
    CLASSIC_DVHOP = "classic_dvhop"
    DEMN = "demn"


@dataclass(frozen=True)
class DistanceEstimate:
    """Estimated anchor-to-unknown distance with its provenance"""
    anchor: int
    unknown: int
    distance: float
    source: EstimateSource
    partner: Optional[int] = None  # constraining 1-hop anchor for DEMN estimates

    def __post_init__(self):
        if not self.distance > 0.0:
            raise EstimationError(
                f"distance estimate for ({self.anchor}, {self.unknown}) must be positive, "
                f"got {self.distance}"
            )

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['source'] = self.source.value
        return data


@dataclass(frozen=True, eq=False)
class AvgHopDistance:
    """
    Per-anchor average meters per hop

    An anchor that reaches no other anchor carries NaN as its error marker.
    """
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    def __getitem__(self, anchor: int) -> float:
        return float(self.values[anchor])

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def is_defined(self, anchor: int) -> bool:
        return bool(np.isfinite(self.values[anchor]))

    def undefined_anchors(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(~np.isfinite(self.values))]


def avg_hop_distance(network: Network, hops: HopMatrix) -> AvgHopDistance:
    """
    Average hop distance of every anchor

    For anchor i: sum of Euclidean distances to the other anchors it reaches,
    divided by the sum of hop counts to them.
    """
    n_a = network.n_anchors
    anchors = network.anchor_positions
    offsets = anchors[:, None, :] - anchors[None, :, :]
    distances = np.hypot(offsets[..., 0], offsets[..., 1])
    anchor_hops = np.asarray(hops[:n_a, :n_a])

    reach = anchor_hops != UNREACHABLE
    np.fill_diagonal(reach, False)
    hop_sums = np.where(reach, anchor_hops, 0).sum(axis=1)
    distance_sums = np.where(reach, distances, 0.0).sum(axis=1)

    values = np.full(n_a, np.nan)
    defined = hop_sums > 0
    values[defined] = distance_sums[defined] / hop_sums[defined]
    if not defined.all():
        logger.warning("Anchors isolated from all other anchors: %s",
                       np.flatnonzero(~defined).tolist())
    return AvgHopDistance(values)


def classic_distance(avg: AvgHopDistance, hops: HopMatrix, anchor: int, unknown: int) -> DistanceEstimate:
    """DV-Hop distance: the anchor's average hop distance times the hop count"""
    hop_count = int(hops[anchor, unknown])
    if hop_count == UNREACHABLE:
        raise EstimationError(f"unknown {unknown} is unreachable from anchor {anchor}")
    if not avg.is_defined(anchor):
        raise EstimationError(f"anchor {anchor} has no average hop distance")
    return DistanceEstimate(
        anchor=anchor,
        unknown=unknown,
        distance=avg[anchor] * hop_count,
        source=EstimateSource.CLASSIC_DVHOP
    )


def least_squares_position(estimates: Iterable[DistanceEstimate],
                           anchor_positions: np.ndarray) -> Tuple[float, float]:
    """
    Multilateration by linearized least squares

    The circle equation of the highest-index anchor is subtracted from the
    others and the resulting linear system is solved through its normal equations.
    """
    estimates = sorted(estimates, key=lambda e: e.anchor)
    if len(estimates) < 3:
        raise SolverError(f"need at least 3 anchors, got {len(estimates)}")

    anchor_positions = np.asarray(anchor_positions, dtype=float)
    points = anchor_positions[[e.anchor for e in estimates]]
    ranges = np.array([e.distance for e in estimates])

    pivot, pivot_range = points[-1], ranges[-1]
    rest, rest_ranges = points[:-1], ranges[:-1]
    a = 2.0 * (rest - pivot)
    b = (np.sum(rest ** 2, axis=1) - np.sum(pivot ** 2)
         - rest_ranges ** 2 + pivot_range ** 2)

    if np.linalg.matrix_rank(a) < 2:
        raise SolverError("anchors are collinear; the linearized system is singular")
    normal = a.T @ a
    try:
        solution = np.linalg.solve(normal, a.T @ b)
    except np.linalg.LinAlgError as e:
        raise SolverError(f"singular normal equations: {e}") from e
    return float(solution[0]), float(solution[1])


def fallback_position(network: Network, hops: HopMatrix, unknown: int) -> Tuple[float, float]:
    """Centroid of the anchors reaching ``unknown``, or the area centre when none do"""
    reaching = [i for i in network.anchor_ids if hops[i, unknown] != UNREACHABLE]
    if reaching:
        centroid = network.anchor_positions[reaching].mean(axis=0)
        return float(centroid[0]), float(centroid[1])
    return network.area[0] / 2.0, network.area[1] / 2.0


def estimate_positions(network: Network, hops: HopMatrix,
                       estimates_by_unknown: Dict[int, List[DistanceEstimate]]) -> np.ndarray:
    """
    Least-squares position of every unknown node

    Unknown nodes without a solvable system fall back to ``fallback_position``.
    Positions are clipped to the deployment area.
    """
    coords = np.empty((network.n_unknowns, 2))
    fallbacks = 0
    for row, unknown in enumerate(network.unknown_ids):
        try:
            coords[row] = least_squares_position(
                estimates_by_unknown.get(unknown, []), network.anchor_positions
            )
        except SolverError:
            coords[row] = fallback_position(network, hops, unknown)
            fallbacks += 1
    if fallbacks:
        logger.info("Least squares fell back for %d of %d unknown nodes",
                    fallbacks, network.n_unknowns)
    np.clip(coords, 0.0, network.area, out=coords)
    return coords
