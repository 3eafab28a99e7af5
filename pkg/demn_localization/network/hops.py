"""
Hop Counts
Connectivity graph and all-pairs minimum hop counts from flooding
"""

from typing import List, Optional
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path
from scipy.spatial.distance import cdist

from .topology import Network

UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class HopMatrix:
    """
    N x N minimum hop counts; ``UNREACHABLE`` marks disconnected pairs
    """
    hops: np.ndarray

    def __post_init__(self):
        hops = np.array(self.hops, dtype=np.int64)
        hops.setflags(write=False)
        object.__setattr__(self, 'hops', hops)

    def __getitem__(self, index):
        return self.hops[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopMatrix):
            return NotImplemented
        return np.array_equal(self.hops, other.hops)

    __hash__ = None

    @property
    def size(self) -> int:
        return int(self.hops.shape[0])

    def is_reachable(self, i: int, j: int) -> bool:
        return bool(self.hops[i, j] != UNREACHABLE)

    def reachable_mask(self) -> np.ndarray:
        return self.hops != UNREACHABLE

    def to_list(self) -> List[List[Optional[int]]]:
        """Nested lists with None for unreachable pairs"""
        return [[None if h == UNREACHABLE else int(h) for h in row] for row in self.hops]


def adjacency(positions: np.ndarray, radius: float) -> csr_matrix:
    """Unit-weight adjacency: an edge joins i != j iff their distance is <= radius"""
    positions = np.asarray(positions, dtype=float)
    linked = cdist(positions, positions) <= radius
    np.fill_diagonal(linked, False)
    return csr_matrix(linked.astype(np.int8))


def hops_from_positions(positions: np.ndarray, radius: float) -> HopMatrix:
    """Breadth-first hop counts between every pair of points"""
    graph = adjacency(positions, radius)
    lengths = shortest_path(graph, method='D', directed=False, unweighted=True)
    hops = np.full(lengths.shape, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(lengths)
    hops[finite] = lengths[finite].astype(np.int64)
    return HopMatrix(hops)


def hop_matrix(network: Network) -> HopMatrix:
    """All-pairs minimum hop counts of a network"""
    return hops_from_positions(network.positions, network.radius)
