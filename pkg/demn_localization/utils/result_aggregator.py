"""
Result Aggregator
Groups per-repeat results into per-cell statistics
"""

from typing import Dict, Any, List, Optional, Tuple
from collections import defaultdict
from dataclasses import dataclass, field
import logging

from ..exceptions import StatisticsError
from ..evaluation.metrics import ala, apg, confidence_interval
from ..evaluation.task_distributor import TaskResult

logger = logging.getLogger(__name__)

CellKey = Tuple[str, str, int, float]

CI_SKIPPED = "ci_skipped_n<2"


@dataclass
class CellSummary:
    """Statistics of one (shape, method, N_a, R) cell"""
    shape: str
    method: str
    n_anchors: int
    radius: float
    samples: List[float] = field(default_factory=list)
    failures: int = 0
    seconds: Optional[float] = None
    mean_ales: Optional[float] = None
    ala: Optional[float] = None
    ci_lower: Optional[float] = None
    ci_upper: Optional[float] = None
    apg_vs: Optional[float] = None
    note: Optional[str] = None

    @property
    def key(self) -> CellKey:
        return self.shape, self.method, self.n_anchors, self.radius

    def to_dict(self) -> Dict[str, Any]:
        return {
            'shape': self.shape,
            'method': self.method,
            'n_anchors': self.n_anchors,
            'radius': self.radius,
            'repeats': len(self.samples),
            'failures': self.failures,
            'mean': self.mean_ales,
            'ala': self.ala,
            'ci_lower': self.ci_lower,
            'ci_upper': self.ci_upper,
            'apg_vs': self.apg_vs,
            'seconds': self.seconds,
            'note': self.note
        }


class ResultAggregator:
    """Aggregates repeat results in cell-key order"""

    def __init__(self, alpha: float = 0.05):
        self.alpha = alpha
        self.results: Dict[CellKey, List[TaskResult]] = defaultdict(list)
        self._order: List[CellKey] = []

    def add_result(self, result: TaskResult):
        task = result.task
        key = (task.shape, task.method, task.n_anchors, task.radius)
        if key not in self.results:
            self._order.append(key)
        self.results[key].append(result)

    def add_results(self, results: List[TaskResult]):
        for result in results:
            self.add_result(result)

    def summarize_cell(self, key: CellKey) -> CellSummary:
        results = sorted(self.results[key], key=lambda r: r.task.repeat)
        shape, method, n_anchors, radius = key
        cell = CellSummary(shape=shape, method=method, n_anchors=n_anchors, radius=radius)
        cell.samples = [r.ales_percent for r in results if r.success]
        cell.failures = sum(1 for r in results if not r.success)
        timings = [r.seconds for r in results if r.seconds is not None]
        cell.seconds = sum(timings) if timings else None
        if not cell.samples:
            cell.note = "no_successful_repeats"
            return cell

        cell.ala = ala(cell.samples)
        cell.mean_ales = 100.0 - cell.ala
        try:
            cell.ci_lower, cell.ci_upper = confidence_interval(cell.samples, self.alpha)
        except StatisticsError:
            cell.note = CI_SKIPPED
        return cell

    def summarize(self) -> List[CellSummary]:
        """Per-cell statistics with the performance gain against the other methods of each cell"""
        cells = [self.summarize_cell(key) for key in self._order]
        by_condition: Dict[Tuple[str, int, float], List[CellSummary]] = defaultdict(list)
        for cell in cells:
            by_condition[(cell.shape, cell.n_anchors, cell.radius)].append(cell)

        for group in by_condition.values():
            for cell in group:
                others = [c.mean_ales for c in group if c is not cell and c.mean_ales is not None]
                if cell.mean_ales is not None and others:
                    cell.apg_vs = apg(others, cell.mean_ales)
        return cells

    def overall_accuracy(self) -> Dict[str, float]:
        """ALA per method over every successful repeat of the grid"""
        samples: Dict[str, List[float]] = defaultdict(list)
        for (_, method, _, _), results in self.results.items():
            samples[method].extend(r.ales_percent for r in results if r.success)
        return {method: ala(values) for method, values in samples.items() if values}

    def create_summary(self) -> Dict[str, Any]:
        cells = self.summarize()
        total = sum(len(results) for results in self.results.values())
        failed = sum(c.failures for c in cells)
        if failed:
            logger.warning("%d of %d repeats failed", failed, total)
        return {
            'alpha': self.alpha,
            'total_repeats': total,
            'failed_repeats': failed,
            'cells': [c.to_dict() for c in cells],
            'overall_ala': self.overall_accuracy()
        }
