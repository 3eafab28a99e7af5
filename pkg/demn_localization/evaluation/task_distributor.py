"""
Task Distribution and Parallel Execution
Runs independent benchmark repeats concurrently and collects their results
"""

from typing import Dict, Any, Callable, List, Optional, Tuple
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor, as_completed
import logging

logger = logging.getLogger(__name__)

TaskKey = Tuple[str, str, int, float, int]


@dataclass(frozen=True)
class RepeatTask:
    """One (method, cell, repeat) run with its derived seeds"""
    shape: str
    method: str
    n_anchors: int
    radius: float
    repeat: int
    network_seed: int = field(default=0, compare=False)
    ga_seed: int = field(default=0, compare=False)

    @property
    def key(self) -> TaskKey:
        return self.shape, self.method, self.n_anchors, self.radius, self.repeat

    @property
    def task_id(self) -> str:
        return f"{self.shape}/{self.method}/Na={self.n_anchors}/R={self.radius:g}/#{self.repeat}"


@dataclass
class TaskResult:
    """Outcome of one repeat; failures carry the error string instead of a score"""
    task: RepeatTask
    success: bool
    ales_percent: Optional[float] = None
    seconds: Optional[float] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'shape': self.task.shape,
            'method': self.task.method,
            'n_anchors': self.task.n_anchors,
            'radius': self.task.radius,
            'repeat': self.task.repeat,
            'success': self.success,
            'ales_percent': self.ales_percent,
            'seconds': self.seconds,
            'error': self.error
        }


class TaskDistributor:
    """Distributes repeat tasks over a thread pool"""

    def __init__(self, max_workers: int = 4):
        self.max_workers = max(1, int(max_workers))
        self.task_history: List[TaskResult] = []

    def distribute_tasks(self, tasks: List[RepeatTask],
                         execute: Callable[[RepeatTask], TaskResult]) -> List[TaskResult]:
        """
        Run every task and return the results in task order

        Args:
            tasks: Tasks to run; each must be independent of the others
            execute: Runs one task

        Returns:
            One TaskResult per task, ordered like ``tasks``
        """
        results: Dict[int, TaskResult] = {}

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {
                executor.submit(self._execute_single_task, execute, task): index
                for index, task in enumerate(tasks)
            }
            for future in as_completed(future_to_index):
                index = future_to_index[future]
                results[index] = future.result()

        ordered = [results[i] for i in range(len(tasks))]
        self.task_history.extend(ordered)
        return ordered

    def _execute_single_task(self, execute: Callable[[RepeatTask], TaskResult],
                             task: RepeatTask) -> TaskResult:
        try:
            return execute(task)
        except Exception as e:
            logger.warning("Task %s failed: %s", task.task_id, e)
            return TaskResult(task=task, success=False, error=f"{type(e).__name__}: {e}")

    def get_successful_results(self, results: List[TaskResult]) -> List[TaskResult]:
        return [r for r in results if r.success]

    def get_task_history(self) -> List[TaskResult]:
        return self.task_history
