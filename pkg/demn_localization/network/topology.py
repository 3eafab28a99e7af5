"""
Network Topology
Synthetic sensor networks over random, C-, O- and X-shaped deployment areas
"""

from typing import Dict, Any, Optional, Tuple
from dataclasses import dataclass, asdict
from enum import Enum
import logging

import numpy as np

from ..exceptions import NetworkError, GenerationError

logger = logging.getLogger(__name__)

MAX_ATTEMPTS_PER_NODE = 10_000


class ShapeKind(Enum):
    """Deployment area shapes"""
    RANDOM = "random"
    C_SHAPE = "c"
    O_SHAPE = "o"
    X_SHAPE = "x"


@dataclass(frozen=True)
class TopologyShape:
    """Shape mask with its parameters, all given as fractions of the area"""
    kind: ShapeKind = ShapeKind.RANDOM
    # C: notch cut out of the right side
    notch_width: float = 0.6
    notch_height: float = 0.5
    # O: annulus centred in the area, radii relative to min(width, height)
    outer_radius: float = 0.5
    inner_radius: float = 0.2
    # X: half-width of each diagonal band relative to min(width, height)
    band_half_width: float = 0.15

    @classmethod
    def named(cls, name: str, **params: float) -> 'TopologyShape':
        """Build a shape from its CLI name: random, c, o or x"""
        aliases = {'c-shape': 'c', 'o-shape': 'o', 'x-shape': 'x',
                   'cshape': 'c', 'oshape': 'o', 'xshape': 'x'}
        key = name.lower()
        key = aliases.get(key, key)
        try:
            kind = ShapeKind(key)
        except ValueError:
            raise GenerationError(f"Unknown topology shape '{name}'") from None
        return cls(kind=kind, **params)

    @property
    def name(self) -> str:
        return self.kind.value

    def is_empty(self) -> bool:
        """True when the mask has zero area for any rectangle"""
        if self.kind is ShapeKind.C_SHAPE:
            return self.notch_width >= 1.0 and self.notch_height >= 1.0
        if self.kind is ShapeKind.O_SHAPE:
            return self.inner_radius >= self.outer_radius or self.outer_radius <= 0.0
        if self.kind is ShapeKind.X_SHAPE:
            return self.band_half_width <= 0.0
        return False

    def contains(self, points: np.ndarray, area: Tuple[float, float]) -> np.ndarray:
        """Boolean mask of the points lying inside the shape"""
        width, height = area
        x = points[:, 0]
        y = points[:, 1]
        inside = (x >= 0.0) & (x <= width) & (y >= 0.0) & (y <= height)
        scale = min(width, height)

        if self.kind is ShapeKind.C_SHAPE:
            notch_left = width * (1.0 - self.notch_width)
            notch_low = height * (1.0 - self.notch_height) / 2.0
            notch_high = height - notch_low
            in_notch = (x > notch_left) & (y > notch_low) & (y < notch_high)
            return inside & ~in_notch

        if self.kind is ShapeKind.O_SHAPE:
            r = np.hypot(x - width / 2.0, y - height / 2.0)
            return inside & (r <= self.outer_radius * scale) & (r >= self.inner_radius * scale)

        if self.kind is ShapeKind.X_SHAPE:
            half = self.band_half_width * scale
            diagonal = np.hypot(width, height)
            # distances to the lines y = (h/w) x and y = h - (h/w) x
            to_main = np.abs(height * x - width * y) / diagonal
            to_anti = np.abs(height * x + width * y - width * height) / diagonal
            return inside & ((to_main <= half) | (to_anti <= half))

        return inside

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['kind'] = self.kind.value
        return data


@dataclass(frozen=True, eq=False)
class Network:
    """
    Sensor network: positions of all nodes, anchors first

    Node ids are the dense indices 0..N-1 of ``positions``; ids below
    ``n_anchors`` are anchors, the rest are unknown nodes.
    """
    positions: np.ndarray
    n_anchors: int
    radius: float
    area: Tuple[float, float]
    shape: str = ShapeKind.RANDOM.value

    def __post_init__(self):
        positions = np.array(self.positions, dtype=float)
        if positions.ndim != 2 or positions.shape[1] != 2:
            raise NetworkError("positions must be an N x 2 array")
        positions.setflags(write=False)
        object.__setattr__(self, 'positions', positions)
        object.__setattr__(self, 'area', (float(self.area[0]), float(self.area[1])))
        object.__setattr__(self, 'radius', float(self.radius))
        object.__setattr__(self, 'n_anchors', int(self.n_anchors))

        n = positions.shape[0]
        if not 0 < self.n_anchors < n:
            raise NetworkError(
                f"anchor count must satisfy 0 < n_anchors < N, got {self.n_anchors} of {n}"
            )
        if self.radius <= 0.0:
            raise NetworkError(f"radius must be positive, got {self.radius}")
        width, height = self.area
        if width <= 0.0 or height <= 0.0:
            raise NetworkError(f"area must be positive, got {self.area}")
        outside = np.flatnonzero(
            (positions[:, 0] < 0.0) | (positions[:, 0] > width) |
            (positions[:, 1] < 0.0) | (positions[:, 1] > height)
        )
        if outside.size:
            raise NetworkError(f"node {int(outside[0])} lies outside the area {self.area}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (self.n_anchors == other.n_anchors and self.radius == other.radius and
                self.area == other.area and self.shape == other.shape and
                np.array_equal(self.positions, other.positions))

    __hash__ = None

    @property
    def n_nodes(self) -> int:
        return int(self.positions.shape[0])

    @property
    def n_unknowns(self) -> int:
        return self.n_nodes - self.n_anchors

    @property
    def anchor_positions(self) -> np.ndarray:
        return self.positions[:self.n_anchors]

    @property
    def unknown_positions(self) -> np.ndarray:
        return self.positions[self.n_anchors:]

    @property
    def anchor_ids(self) -> range:
        return range(self.n_anchors)

    @property
    def unknown_ids(self) -> range:
        return range(self.n_anchors, self.n_nodes)

    @property
    def diagonal(self) -> float:
        return float(np.hypot(*self.area))

    def with_unknown_positions(self, coords: np.ndarray) -> np.ndarray:
        """Full position array with the unknown nodes moved to ``coords``"""
        return np.vstack([self.anchor_positions, np.asarray(coords, dtype=float)])


def generate_network(shape: TopologyShape, n: int, n_anchors: int, radius: float,
                     area: Tuple[float, float] = (100.0, 100.0),
                     seed: Optional[int] = None,
                     max_attempts_per_node: int = MAX_ATTEMPTS_PER_NODE) -> Network:
    """
    Generate a network with nodes uniform over the shape mask

    Args:
        shape: Deployment shape mask
        n: Total node count
        n_anchors: Anchor count; the first n_anchors points become anchors
        radius: Communication radius in meters
        area: (width, height) of the bounding rectangle in meters
        seed: Random seed; identical seeds give identical networks

    Returns:
        Network with ``n`` in-mask positions
    """
    if not 0 < n_anchors < n:
        raise GenerationError(f"need 0 < n_anchors < n, got {n_anchors} of {n}")
    if shape.is_empty():
        raise GenerationError(f"shape mask '{shape.name}' has no area")

    rng = np.random.default_rng(seed)
    width, height = float(area[0]), float(area[1])
    budget = n * max_attempts_per_node
    accepted = []
    count = 0
    attempts = 0
    while count < n:
        if attempts >= budget:
            raise GenerationError(
                f"placed {count} of {n} nodes in {attempts} attempts; "
                f"shape mask '{shape.name}' is degenerate"
            )
        batch = min(max(2 * (n - count), 64), budget - attempts)
        candidates = rng.uniform((0.0, 0.0), (width, height), size=(batch, 2))
        attempts += batch
        keep = candidates[shape.contains(candidates, (width, height))]
        if keep.size:
            keep = keep[:n - count]
            accepted.append(keep)
            count += keep.shape[0]

    positions = np.vstack(accepted)
    logger.info("Generated %s network: %d nodes, %d anchors, %d attempts",
                shape.name, n, n_anchors, attempts)
    return Network(
        positions=positions,
        n_anchors=n_anchors,
        radius=radius,
        area=(width, height),
        shape=shape.name,
    )
