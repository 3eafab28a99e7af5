"""
Experiment Runner
Benchmark grid over anchor counts and radii with paired, seeded networks
"""

from typing import Dict, Any, List, Optional, Tuple
from dataclasses import dataclass, field, asdict
import hashlib
import logging
import time

import numpy as np

from ..exceptions import ConfigError, GenerationError
from ..estimation.cross_domain import UpperBoundModel
from ..network.topology import TopologyShape, generate_network
from ..network.hops import hop_matrix
from ..optimization.solver import GaConfig
from ..utils.result_aggregator import CellSummary, ResultAggregator
from .metrics import ales
from .methods import GeneticLocalizer, available_methods, create_localizer
from .task_distributor import RepeatTask, TaskDistributor, TaskResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentConfig:
    """Benchmark grid; defaults mirror the simulation setup (100 nodes in 100 m x 100 m)"""
    shape: str = "random"
    n: int = 100
    anchor_counts: Tuple[int, ...] = (5, 10, 15, 20, 25, 30)
    radii: Tuple[float, ...] = (25.0, 30.0, 35.0, 40.0)
    repeats: int = 50
    methods: Tuple[str, ...] = ("dvhop", "demn-hop")
    ga: GaConfig = field(default_factory=GaConfig)
    seed_base: int = 0
    area: Tuple[float, float] = (100.0, 100.0)
    alpha: float = 0.05
    max_workers: int = 4
    record_timing: bool = True
    ub_table: Optional[Dict[int, float]] = None

    def __post_init__(self):
        object.__setattr__(self, 'anchor_counts', tuple(int(a) for a in self.anchor_counts))
        object.__setattr__(self, 'radii', tuple(float(r) for r in self.radii))
        object.__setattr__(self, 'methods', tuple(self.methods))
        object.__setattr__(self, 'area', (float(self.area[0]), float(self.area[1])))
        if self.repeats < 1:
            raise ConfigError(f"repeats must be >= 1, got {self.repeats}")
        if not self.radii or any(r <= 0.0 for r in self.radii):
            raise ConfigError(f"radii must be a non-empty list of positive values, got {self.radii}")
        if not self.anchor_counts or any(not 0 < a < self.n for a in self.anchor_counts):
            raise ConfigError(f"anchor counts must lie in (0, {self.n}), got {self.anchor_counts}")
        if not self.methods:
            raise ConfigError("at least one method is required")
        unknown = [m for m in self.methods if m not in available_methods()]
        if unknown:
            raise ConfigError(f"unknown methods {unknown}; choose from {available_methods()}")
        if self.max_workers < 1:
            raise ConfigError(f"max_workers must be >= 1, got {self.max_workers}")
        try:
            TopologyShape.named(self.shape)
        except GenerationError as e:
            raise ConfigError(str(e)) from e
        self.ub_model()

    def ub_model(self) -> UpperBoundModel:
        if self.ub_table is None:
            return UpperBoundModel()
        return UpperBoundModel.custom(self.ub_table)

    def replace(self, **changes: Any) -> 'ExperimentConfig':
        data = {name: getattr(self, name) for name in self.__dataclass_fields__}
        data.update(changes)
        return ExperimentConfig(**data)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['ga'] = self.ga.to_dict()
        for name in ('anchor_counts', 'radii', 'methods', 'area'):
            data[name] = list(data[name])
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ExperimentConfig':
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown experiment settings: {sorted(unknown)}")
        values = dict(data)
        if 'ga' in values and not isinstance(values['ga'], GaConfig):
            values['ga'] = GaConfig.from_dict(values['ga'] or {})
        return cls(**values)


@dataclass
class ExperimentReport:
    """Per-repeat results in grid order plus the per-cell summary"""
    config: ExperimentConfig
    results: List[TaskResult]
    cells: List[CellSummary]
    overall_ala: Dict[str, float]
    summary: Dict[str, Any]

    def cell(self, method: str, n_anchors: int, radius: float) -> CellSummary:
        for cell in self.cells:
            if cell.method == method and cell.n_anchors == n_anchors and cell.radius == float(radius):
                return cell
        raise KeyError((method, n_anchors, radius))

    def failed(self) -> List[TaskResult]:
        return [r for r in self.results if not r.success]


def cell_seed(seed_base: int, shape: str, n_anchors: int, radius: float, repeat: int) -> int:
    """Method-independent network seed so every method of a cell sees the same layouts"""
    text = f"{seed_base}|{shape}|{n_anchors}|{float(radius)!r}|{repeat}"
    return int.from_bytes(hashlib.sha256(text.encode('utf-8')).digest()[:8], 'big')


def ga_seed(network_seed: int, base: int) -> int:
    return int(np.random.SeedSequence([network_seed, base]).generate_state(1, dtype=np.uint32)[0])


def build_tasks(config: ExperimentConfig) -> List[RepeatTask]:
    """Grid tasks ordered by method, anchor count, radius and repeat"""
    tasks = []
    for method in config.methods:
        for n_anchors in config.anchor_counts:
            for radius in config.radii:
                for repeat in range(config.repeats):
                    seed = cell_seed(config.seed_base, config.shape, n_anchors, radius, repeat)
                    tasks.append(RepeatTask(
                        shape=config.shape,
                        method=method,
                        n_anchors=n_anchors,
                        radius=radius,
                        repeat=repeat,
                        network_seed=seed,
                        ga_seed=ga_seed(seed, config.ga.seed)
                    ))
    return tasks


class RepeatExecutor:
    """Runs one repeat: generate the cell's network, localize, score"""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.shape = TopologyShape.named(config.shape)
        self.ub_model = config.ub_model()

    def __call__(self, task: RepeatTask) -> TaskResult:
        config = self.config
        network = generate_network(self.shape, config.n, task.n_anchors, task.radius,
                                   area=config.area, seed=task.network_seed)
        hops = hop_matrix(network)
        localizer = create_localizer(task.method, config.ga, self.ub_model)
        if isinstance(localizer, GeneticLocalizer):
            localizer = localizer.with_seed(task.ga_seed)

        started = time.perf_counter()
        result = localizer.localize(network, hops)
        elapsed = time.perf_counter() - started

        score = ales(result.placement, network.unknown_positions, network.radius)
        return TaskResult(
            task=task,
            success=True,
            ales_percent=score,
            seconds=elapsed if config.record_timing else None
        )


def run_experiment(config: ExperimentConfig,
                   distributor: Optional[TaskDistributor] = None) -> ExperimentReport:
    """
    Run every (method, N_a, R, repeat) of the grid and aggregate per cell

    A repeat that raises is recorded as failed with its error string; the grid
    always completes. Results are deterministic for a fixed ``seed_base`` and
    GA seed regardless of the worker count.
    """
    distributor = distributor or TaskDistributor(config.max_workers)
    tasks = build_tasks(config)
    logger.info("Running %d repeats over %d methods, %d anchor counts, %d radii",
                len(tasks), len(config.methods), len(config.anchor_counts), len(config.radii))

    results = distributor.distribute_tasks(tasks, RepeatExecutor(config))

    aggregator = ResultAggregator(alpha=config.alpha)
    aggregator.add_results(results)
    summary = aggregator.create_summary()
    cells = aggregator.summarize()
    for cell in cells:
        logger.info("Cell %s/%s Na=%d R=%g: mean ALEs %s over %d repeats",
                    cell.shape, cell.method, cell.n_anchors, cell.radius,
                    "n/a" if cell.mean_ales is None else f"{cell.mean_ales:.2f}%", len(cell.samples))

    return ExperimentReport(
        config=config,
        results=results,
        cells=cells,
        overall_ala=aggregator.overall_accuracy(),
        summary=summary
    )
