"""
Multi-Objective Genetic Solver
NSGA-II search over placements of the unknown nodes
"""

from typing import Dict, Any, List, Optional, Tuple
from dataclasses import dataclass, field, asdict
import logging

import numpy as np

from ..exceptions import ConfigError
from ..core.dvhop import estimate_positions
from ..network.topology import Network
from ..network.hops import HopMatrix
from ..objectives.losses import DistanceTable, ObjectiveEvaluator, ObjectiveValues, Placement
from .nsga2 import non_dominated_sort, crowding_distance
from .operators import sbx_crossover, polynomial_mutation

logger = logging.getLogger(__name__)

OBJECTIVE_NAMES = ('f1', 'f2')


@dataclass(frozen=True)
class GaConfig:
    """Genetic search parameters; defaults follow the simulation parameter table"""
    population_size: int = 20
    max_iter: int = 500
    pc: float = 0.9
    pm: float = 0.1
    seed: int = 0
    eta_c: float = 20.0
    eta_m: float = 20.0
    objectives: Tuple[str, ...] = OBJECTIVE_NAMES
    warm_start: bool = False
    log_every: int = 50

    def __post_init__(self):
        object.__setattr__(self, 'objectives', tuple(self.objectives))
        if self.population_size < 2 or self.population_size % 2:
            raise ConfigError(f"population_size must be even and >= 2, got {self.population_size}")
        if self.max_iter < 0:
            raise ConfigError(f"max_iter must be non-negative, got {self.max_iter}")
        for name in ('pc', 'pm'):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {value}")
        if self.eta_c <= 0.0 or self.eta_m <= 0.0:
            raise ConfigError("distribution indices must be positive")
        if self.objectives not in (('f1', 'f2'), ('f1',)):
            raise ConfigError(f"objectives must be ('f1', 'f2') or ('f1',), got {self.objectives}")

    @property
    def uses_hop_loss(self) -> bool:
        return 'f2' in self.objectives

    def replace(self, **changes: Any) -> 'GaConfig':
        data = asdict(self)
        data.update(changes)
        return GaConfig(**data)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['objectives'] = list(self.objectives)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GaConfig':
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        unknown = set(data) - set(known)
        if unknown:
            raise ConfigError(f"unknown GA settings: {sorted(unknown)}")
        if 'objectives' in known:
            known['objectives'] = tuple(known['objectives'])
        return cls(**known)


@dataclass
class Individual:
    """Candidate placement with its objective values and NSGA-II bookkeeping"""
    placement: Placement
    objectives: ObjectiveValues
    rank: int = 0
    crowding: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'placement': self.placement.to_list(),
            'objectives': self.objectives.to_dict(),
            'rank': self.rank,
            'crowding': self.crowding
        }


@dataclass
class ParetoResult:
    """Final population, the output individual and the per-generation best (f1, f2)"""
    final_population: List[Individual]
    chosen: Individual
    history: List[Tuple[float, float]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'chosen': self.chosen.to_dict(),
            'history': [{'f1': a, 'f2': b} for a, b in self.history],
            'final_population': [ind.objectives.to_dict() for ind in self.final_population]
        }


def choose_output(objectives: np.ndarray, use_hop_loss: bool = True) -> int:
    """
    Index of the output individual

    Minimum f2, ties broken by smaller f1 then lower index; minimum f1 when the
    hop loss is not searched.
    """
    f1_values, f2_values = objectives[:, 0], objectives[:, 1]
    index = np.arange(objectives.shape[0])
    if use_hop_loss:
        order = np.lexsort((index, f1_values, f2_values))
    else:
        order = np.lexsort((index, f2_values, f1_values))
    return int(order[0])


class GeneticSolver:
    """Owns the random stream and runs generations sequentially"""

    def __init__(self, network: Network, hops: HopMatrix, table: DistanceTable, config: GaConfig):
        self.network = network
        self.hops = hops
        self.table = table
        self.config = config
        self.evaluator = ObjectiveEvaluator(network, hops, table)
        self.rng = np.random.default_rng(config.seed)
        self.lower = np.zeros(2 * network.n_unknowns)
        self.upper = np.tile(np.asarray(network.area, dtype=float), network.n_unknowns)
        self.columns = [OBJECTIVE_NAMES.index(name) for name in config.objectives]

    def evaluate(self, genes: np.ndarray) -> np.ndarray:
        values = [self.evaluator.evaluate(Placement.from_genes(row)).as_tuple() for row in genes]
        return np.asarray(values, dtype=float).reshape(-1, 2)

    def initial_population(self) -> np.ndarray:
        size = self.config.population_size
        genes = self.rng.uniform(self.lower, self.upper, size=(size, self.lower.shape[0]))
        if self.config.warm_start:
            genes[0] = estimate_positions(self.network, self.hops, self.table.by_unknown()).reshape(-1)
        return genes

    def rank_population(self, objectives: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Front rank and crowding distance of every individual"""
        vectors = objectives[:, self.columns]
        ranks = np.zeros(vectors.shape[0], dtype=int)
        crowding = np.zeros(vectors.shape[0])
        for rank, front in enumerate(non_dominated_sort(vectors)):
            ranks[front] = rank
            crowding[front] = crowding_distance(vectors[front])
        return ranks, crowding

    def tournament(self, ranks: np.ndarray, crowding: np.ndarray) -> int:
        a, b = self.rng.integers(0, ranks.shape[0], size=2)
        if ranks[a] != ranks[b]:
            return int(a if ranks[a] < ranks[b] else b)
        return int(b if crowding[b] > crowding[a] else a)

    def make_offspring(self, genes: np.ndarray, ranks: np.ndarray, crowding: np.ndarray) -> np.ndarray:
        config = self.config
        offspring = np.empty_like(genes)
        for slot in range(0, genes.shape[0], 2):
            parent1 = genes[self.tournament(ranks, crowding)]
            parent2 = genes[self.tournament(ranks, crowding)]
            if self.rng.random() < config.pc:
                child1, child2 = sbx_crossover(parent1, parent2, self.lower, self.upper,
                                               config.eta_c, self.rng)
            else:
                child1, child2 = parent1.copy(), parent2.copy()
            offspring[slot] = polynomial_mutation(child1, self.lower, self.upper,
                                                  config.pm, config.eta_m, self.rng)
            offspring[slot + 1] = polynomial_mutation(child2, self.lower, self.upper,
                                                      config.pm, config.eta_m, self.rng)
        return np.clip(offspring, self.lower, self.upper)

    def select(self, objectives: np.ndarray) -> np.ndarray:
        """Elitist environmental selection: fill by fronts, cut the last one by crowding"""
        size = self.config.population_size
        vectors = objectives[:, self.columns]
        survivors: List[int] = []
        for front in non_dominated_sort(vectors):
            if len(survivors) + len(front) <= size:
                survivors.extend(front)
                continue
            members = np.asarray(front)
            distances = np.asarray(crowding_distance(vectors[front]))
            # crowding ties go to the output order so the best individual always survives
            f1_values, f2_values = objectives[members, 0], objectives[members, 1]
            if self.config.uses_hop_loss:
                order = np.lexsort((members, f1_values, f2_values, -distances))
            else:
                order = np.lexsort((members, f2_values, f1_values, -distances))
            survivors.extend(int(members[i]) for i in order[:size - len(survivors)])
            break
        return np.asarray(survivors, dtype=int)

    def run(self) -> ParetoResult:
        genes = self.initial_population()
        objectives = self.evaluate(genes)
        history = [(float(objectives[:, 0].min()), float(objectives[:, 1].min()))]

        for generation in range(self.config.max_iter):
            ranks, crowding = self.rank_population(objectives)
            offspring = self.make_offspring(genes, ranks, crowding)
            pooled_genes = np.vstack([genes, offspring])
            pooled = np.vstack([objectives, self.evaluate(offspring)])
            keep = self.select(pooled)
            genes, objectives = pooled_genes[keep], pooled[keep]
            history.append((float(objectives[:, 0].min()), float(objectives[:, 1].min())))
            if self.config.log_every and (generation + 1) % self.config.log_every == 0:
                logger.debug("Generation %d: best f1=%.4g, best f2=%.4g",
                             generation + 1, history[-1][0], history[-1][1])

        ranks, crowding = self.rank_population(objectives)
        population = [
            Individual(
                placement=Placement.from_genes(genes[i]),
                objectives=ObjectiveValues(f1=float(objectives[i, 0]), f2=float(objectives[i, 1])),
                rank=int(ranks[i]),
                crowding=float(crowding[i])
            )
            for i in range(genes.shape[0])
        ]
        chosen = population[choose_output(objectives, self.config.uses_hop_loss)]
        return ParetoResult(final_population=population, chosen=chosen, history=history)


def run(network: Network, hops: HopMatrix, table: DistanceTable, config: Optional[GaConfig] = None) -> ParetoResult:
    """
    Evolve placements of all unknown nodes and return the Pareto result

    Args:
        network: Network with true anchor positions
        hops: Real hop matrix from flooding
        table: Distance table computed once before the search
        config: Genetic search parameters

    Returns:
        ParetoResult whose ``chosen`` individual is the localization output
    """
    return GeneticSolver(network, hops, table, config or GaConfig()).run()
