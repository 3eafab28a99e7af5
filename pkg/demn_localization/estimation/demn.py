"""
Distance Estimation using Multinode
Expected anchor-to-unknown distances for unknown nodes detected by two anchors
"""

from typing import Dict, List, Optional, Tuple
import logging

import numpy as np
from scipy.spatial.distance import cdist

from ..exceptions import DomainError, NumericError
from ..core.dvhop import DistanceEstimate, EstimateSource
from ..network.topology import Network
from ..network.hops import HopMatrix
from .cross_domain import CrossDomainCase, UpperBoundModel
from .expected_distance import expected_distance

logger = logging.getLogger(__name__)

MAX_DEMN_HOPS = 2


class DemnEstimator:
    """
    Computes DEMN estimates for a network

    Expected distances depend only on (d, R, m, ub), so they are cached per
    (anchor i, anchor j, m) and shared across unknown nodes.
    """

    def __init__(self, network: Network, ub_model: Optional[UpperBoundModel] = None):
        self.network = network
        self.ub_model = ub_model or UpperBoundModel()
        self.separations = cdist(network.anchor_positions, network.anchor_positions)
        self._cache: Dict[Tuple[int, int, int], Optional[float]] = {}

    def pair_expectation(self, anchor: int, partner: int, m: int) -> Optional[float]:
        """Expected distance for (a_i, a_j, m), or None when the case is outside the formula's regime"""
        key = (anchor, partner, m)
        if key not in self._cache:
            self._cache[key] = self._compute(anchor, partner, m)
        return self._cache[key]

    def _compute(self, anchor: int, partner: int, m: int) -> Optional[float]:
        radius = self.network.radius
        try:
            case = CrossDomainCase(
                d=float(self.separations[anchor, partner]),
                radius=radius,
                m=m,
                ub=self.ub_model(m, radius)
            )
            return expected_distance(case)
        except (DomainError, NumericError) as e:
            logger.debug("No DEMN estimate for anchors (%d, %d), m=%d: %s", anchor, partner, m, e)
            return None

    def estimates_for(self, hops: HopMatrix, unknown: int) -> List[DistanceEstimate]:
        """
        DEMN estimates for one unknown node

        Anchor i qualifies when it is m <= 2 hops away and another anchor j is
        one hop away. Among qualifying partners the nearest one to a_i with a
        valid case is used.
        """
        n_a = self.network.n_anchors
        to_unknown = np.asarray(hops[:n_a, unknown])
        one_hop = np.flatnonzero(to_unknown == 1)
        if one_hop.size == 0:
            return []

        estimates = []
        for anchor in np.flatnonzero((to_unknown >= 1) & (to_unknown <= MAX_DEMN_HOPS)):
            anchor = int(anchor)
            m = int(to_unknown[anchor])
            partners = [int(j) for j in one_hop if j != anchor]
            partners.sort(key=lambda j: (self.separations[anchor, j], j))
            for partner in partners:
                value = self.pair_expectation(anchor, partner, m)
                if value is not None:
                    estimates.append(DistanceEstimate(
                        anchor=anchor,
                        unknown=unknown,
                        distance=value,
                        source=EstimateSource.DEMN,
                        partner=partner
                    ))
                    break
        return estimates


def demn_estimates(network: Network, hops: HopMatrix,
                   ub_model: Optional[UpperBoundModel] = None) -> List[DistanceEstimate]:
    """DEMN estimates for every (anchor, unknown) pair the formula covers"""
    estimator = DemnEstimator(network, ub_model)
    estimates = []
    for unknown in network.unknown_ids:
        estimates.extend(estimator.estimates_for(hops, unknown))
    logger.info("DEMN produced %d estimates for %d unknown nodes",
                len(estimates), network.n_unknowns)
    return estimates
