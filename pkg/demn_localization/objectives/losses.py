"""
Localization Losses
Euclidean distance loss (f1) and hop loss (f2) of a candidate placement
"""

from typing import Dict, Any, Iterator, List, Optional, Tuple
from dataclasses import dataclass
import logging
import math

import numpy as np
from scipy.spatial.distance import cdist

from ..core.dvhop import (
    DistanceEstimate, EstimateSource, AvgHopDistance, avg_hop_distance, classic_distance
)
from ..estimation.cross_domain import UpperBoundModel
from ..estimation.demn import demn_estimates
from ..network.topology import Network
from ..network.hops import HopMatrix, UNREACHABLE, hops_from_positions

logger = logging.getLogger(__name__)

HOP_LOSS_LIMIT = 3


@dataclass(frozen=True, eq=False)
class Placement:
    """Predicted coordinates of all unknown nodes, row k for unknown N_a + k"""
    coords: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float).reshape(-1, 2)
        coords.setflags(write=False)
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def from_genes(cls, genes: np.ndarray) -> 'Placement':
        return cls(np.asarray(genes, dtype=float).reshape(-1, 2))

    @property
    def genes(self) -> np.ndarray:
        return self.coords.reshape(-1)

    def __len__(self) -> int:
        return int(self.coords.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Placement):
            return NotImplemented
        return np.array_equal(self.coords, other.coords)

    __hash__ = None

    def to_list(self) -> List[List[float]]:
        return self.coords.tolist()


@dataclass(frozen=True)
class ObjectiveValues:
    """f1 in square meters, f2 in squared hops"""
    f1: float
    f2: float

    def as_tuple(self) -> Tuple[float, float]:
        return self.f1, self.f2

    def to_dict(self) -> Dict[str, float]:
        return {'f1': self.f1, 'f2': self.f2}


class DistanceTable:
    """
    Estimated distance per reachable (anchor, unknown) pair

    Dense views (``distances`` with NaN for missing pairs) back the
    vectorized loss evaluation.
    """

    def __init__(self, n_anchors: int, n_unknowns: int, estimates: List[DistanceEstimate]):
        self.n_anchors = n_anchors
        self.n_unknowns = n_unknowns
        self._entries: Dict[Tuple[int, int], DistanceEstimate] = {}
        self.distances = np.full((n_anchors, n_unknowns), np.nan)
        for estimate in estimates:
            self._entries[(estimate.anchor, estimate.unknown)] = estimate
            self.distances[estimate.anchor, estimate.unknown - n_anchors] = estimate.distance
        self.distances.setflags(write=False)
        self.mask = np.isfinite(self.distances)

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        return pair in self._entries

    def __getitem__(self, pair: Tuple[int, int]) -> DistanceEstimate:
        return self._entries[pair]

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._entries))

    def get(self, anchor: int, unknown: int) -> Optional[DistanceEstimate]:
        return self._entries.get((anchor, unknown))

    def items(self) -> List[Tuple[Tuple[int, int], DistanceEstimate]]:
        return [(key, self._entries[key]) for key in sorted(self._entries)]

    def for_unknown(self, unknown: int) -> List[DistanceEstimate]:
        return [e for (_, k), e in self.items() if k == unknown]

    def by_unknown(self) -> Dict[int, List[DistanceEstimate]]:
        grouped: Dict[int, List[DistanceEstimate]] = {}
        for (_, unknown), estimate in self.items():
            grouped.setdefault(unknown, []).append(estimate)
        return grouped

    def count_by_source(self) -> Dict[str, int]:
        counts = {source.value: 0 for source in EstimateSource}
        for estimate in self._entries.values():
            counts[estimate.source.value] += 1
        return counts


def distance_table(network: Network, hops: HopMatrix,
                   ub_model: Optional[UpperBoundModel] = None,
                   use_demn: bool = True,
                   avg: Optional[AvgHopDistance] = None) -> DistanceTable:
    """
    Distance table mixing DEMN and classic estimates

    DEMN estimates are used where the multinode formula applies; every other
    reachable pair gets the classic DV-Hop estimate. With ``use_demn`` off the
    table is purely classic.
    """
    avg = avg if avg is not None else avg_hop_distance(network, hops)
    entries: Dict[Tuple[int, int], DistanceEstimate] = {}
    if use_demn:
        for estimate in demn_estimates(network, hops, ub_model):
            entries[(estimate.anchor, estimate.unknown)] = estimate

    for anchor in network.anchor_ids:
        if not avg.is_defined(anchor):
            continue
        for unknown in network.unknown_ids:
            if (anchor, unknown) in entries or hops[anchor, unknown] == UNREACHABLE:
                continue
            entries[(anchor, unknown)] = classic_distance(avg, hops, anchor, unknown)

    table = DistanceTable(network.n_anchors, network.n_unknowns, list(entries.values()))
    logger.info("Distance table: %s", table.count_by_source())
    return table


def f1(placement: Placement, table: DistanceTable, anchor_positions: np.ndarray) -> float:
    """Sum over unknowns and tabled anchors of (distance - estimated distance)^2"""
    actual = cdist(np.asarray(anchor_positions, dtype=float), placement.coords)
    residuals = np.where(table.mask, actual - np.nan_to_num(table.distances), 0.0)
    return float(np.sum(residuals ** 2))


def predicted_hops(placement: Placement, network: Network) -> HopMatrix:
    """Hop counts recomputed from true anchor positions and the placement"""
    return hops_from_positions(network.with_unknown_positions(placement.coords), network.radius)


def hop_penalty(network: Network) -> int:
    """Stand-in hop count for pairs a placement leaves disconnected"""
    return int(math.ceil(network.diagonal / network.radius)) + 1


def hop_loss_mask(real: HopMatrix, n_anchors: int) -> np.ndarray:
    """Unordered pairs that enter the hop loss: real hop below the limit, not anchor-anchor"""
    hops = real.hops
    size = hops.shape[0]
    mask = np.triu(np.ones((size, size), dtype=bool), k=1)
    mask &= (hops != UNREACHABLE) & (hops < HOP_LOSS_LIMIT)
    mask[:n_anchors, :n_anchors] = False
    return mask


def f2(pred: HopMatrix, real: HopMatrix, n_anchors: int,
       unreachable_penalty: Optional[int] = None, mask: Optional[np.ndarray] = None) -> float:
    """
    Hop loss: squared differences between real and predicted hop counts

    Only unordered pairs with a real hop count below 3 contribute, and the
    first ``n_anchors`` nodes form no pairs among themselves. Unreachable
    predicted hops count as ``unreachable_penalty`` (default: node count).
    """
    if pred.size != real.size:
        raise ValueError(f"hop matrices differ in size: {pred.size} vs {real.size}")
    penalty = real.size if unreachable_penalty is None else unreachable_penalty
    if mask is None:
        mask = hop_loss_mask(real, n_anchors)
    predicted = np.where(pred.hops == UNREACHABLE, penalty, pred.hops)
    diff = (real.hops - predicted)[mask]
    return float(np.sum(diff.astype(float) ** 2))


class ObjectiveEvaluator:
    """Evaluates (f1, f2) for placements of one network"""

    def __init__(self, network: Network, real: HopMatrix, table: DistanceTable):
        self.network = network
        self.real = real
        self.table = table
        self.penalty = hop_penalty(network)
        self.mask = hop_loss_mask(real, network.n_anchors)

    def hop_loss(self, placement: Placement) -> float:
        return f2(predicted_hops(placement, self.network), self.real, self.network.n_anchors,
                  unreachable_penalty=self.penalty, mask=self.mask)

    def evaluate(self, placement: Placement) -> ObjectiveValues:
        return ObjectiveValues(
            f1=f1(placement, self.table, self.network.anchor_positions),
            f2=self.hop_loss(placement)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'penalty': self.penalty,
            'pairs_in_hop_loss': int(self.mask.sum()),
            'table': self.table.count_by_source()
        }
