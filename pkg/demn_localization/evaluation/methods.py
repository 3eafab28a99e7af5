"""
Localization Methods
Common interface for every localizer evaluated by the benchmark
"""

from abc import ABC, abstractmethod
from typing import Dict, Any, Callable, List, Optional, Tuple
from dataclasses import dataclass, field
import logging

import numpy as np

from ..exceptions import ConfigError
from ..core.dvhop import estimate_positions
from ..estimation.cross_domain import UpperBoundModel
from ..network.topology import Network
from ..network.hops import HopMatrix
from ..objectives.losses import Placement, distance_table
from ..optimization.solver import GaConfig, run as run_genetic_search

logger = logging.getLogger(__name__)


@dataclass
class LocalizationResult:
    """Standardized localizer output"""
    method: str
    placement: Placement
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'method': self.method,
            'placement': self.placement.to_list(),
            'metadata': self.metadata
        }


class BaseLocalizer(ABC):
    """Base class for all localization methods"""

    name = "base"

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}

    @abstractmethod
    def localize(self, network: Network, hops: HopMatrix) -> LocalizationResult:
        """Estimate the positions of all unknown nodes"""

    def _create_result(self, coords: np.ndarray, metadata: Dict[str, Any]) -> LocalizationResult:
        return LocalizationResult(
            method=self.name,
            placement=Placement(coords),
            metadata=metadata
        )


class DvHopLocalizer(BaseLocalizer):
    """Classic DV-Hop: average hop distance times hop count, then least squares"""

    name = "dvhop"

    def localize(self, network: Network, hops: HopMatrix) -> LocalizationResult:
        table = distance_table(network, hops, use_demn=False)
        coords = estimate_positions(network, hops, table.by_unknown())
        return self._create_result(coords, {'table': table.count_by_source()})


class GeneticLocalizer(BaseLocalizer):
    """
    Genetic search over placements

    ``use_demn`` selects the distance table feeding f1; the GA objectives
    decide whether the hop loss is searched and how the output is chosen.
    """

    def __init__(self, name: str, use_demn: bool, objectives: Tuple[str, ...],
                 ga_config: Optional[GaConfig] = None,
                 ub_model: Optional[UpperBoundModel] = None,
                 config: Optional[Dict[str, Any]] = None):
        super().__init__(config)
        self.name = name
        self.use_demn = use_demn
        self.ga_config = (ga_config or GaConfig()).replace(objectives=tuple(objectives))
        self.ub_model = ub_model

    def with_seed(self, seed: int) -> 'GeneticLocalizer':
        """Copy of this localizer whose search uses ``seed``"""
        return GeneticLocalizer(self.name, self.use_demn, self.ga_config.objectives,
                                self.ga_config.replace(seed=seed), self.ub_model, self.config)

    def localize(self, network: Network, hops: HopMatrix) -> LocalizationResult:
        table = distance_table(network, hops, ub_model=self.ub_model, use_demn=self.use_demn)
        result = run_genetic_search(network, hops, table, self.ga_config)
        chosen = result.chosen
        return self._create_result(chosen.placement.coords, {
            'table': table.count_by_source(),
            'objectives': chosen.objectives.to_dict(),
            'generations': len(result.history) - 1,
            'history': [list(point) for point in result.history]
        })


LocalizerFactory = Callable[[GaConfig, Optional[UpperBoundModel]], BaseLocalizer]

METHODS: Dict[str, LocalizerFactory] = {
    'dvhop': lambda ga, ub: DvHopLocalizer(),
    'demn': lambda ga, ub: GeneticLocalizer('demn', True, ('f1',), ga, ub),
    'hop-loss': lambda ga, ub: GeneticLocalizer('hop-loss', False, ('f1', 'f2'), ga, ub),
    'demn-hop': lambda ga, ub: GeneticLocalizer('demn-hop', True, ('f1', 'f2'), ga, ub),
}


def available_methods() -> List[str]:
    return list(METHODS)


def create_localizer(name: str, ga_config: Optional[GaConfig] = None,
                     ub_model: Optional[UpperBoundModel] = None) -> BaseLocalizer:
    """Build the registered localizer ``name``"""
    if name not in METHODS:
        raise ConfigError(f"unknown method '{name}'; choose from {available_methods()}")
    return METHODS[name](ga_config or GaConfig(), ub_model)
