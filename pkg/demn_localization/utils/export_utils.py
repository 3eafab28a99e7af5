"""
Export Utilities
Results CSV, summary JSON and the human-readable benchmark report
"""

from typing import Dict, Any, List, Optional
from pathlib import Path
import csv
import json
import logging

from ..evaluation.task_distributor import RepeatTask, TaskResult

logger = logging.getLogger(__name__)

RESULT_COLUMNS = ['shape', 'method', 'n_anchors', 'radius', 'repeat', 'ales_percent', 'seconds', 'error']


def _format_float(value: Optional[float]) -> str:
    return '' if value is None else repr(float(value))


def _parse_float(text: str) -> Optional[float]:
    return float(text) if text != '' else None


def write_results_csv(results: List[TaskResult], path: str) -> Path:
    """
    Write one row per repeat, in the given order

    Floats use their shortest round-trip representation so identical runs
    produce identical files.
    """
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(RESULT_COLUMNS)
        for result in results:
            task = result.task
            writer.writerow([
                task.shape,
                task.method,
                task.n_anchors,
                _format_float(task.radius),
                task.repeat,
                _format_float(result.ales_percent),
                _format_float(result.seconds),
                result.error or ''
            ])
    logger.info("Wrote %d result rows to %s", len(results), output_path)
    return output_path


def load_results_csv(path: str) -> List[TaskResult]:
    """Read a results CSV written by ``write_results_csv``"""
    with open(path, 'r', newline='') as f:
        reader = csv.DictReader(f)
        missing = set(RESULT_COLUMNS) - set(reader.fieldnames or [])
        if missing:
            raise ValueError(f"{path} is missing columns {sorted(missing)}")
        results = []
        for row in reader:
            task = RepeatTask(
                shape=row['shape'],
                method=row['method'],
                n_anchors=int(row['n_anchors']),
                radius=float(row['radius']),
                repeat=int(row['repeat'])
            )
            ales_percent = _parse_float(row['ales_percent'])
            results.append(TaskResult(
                task=task,
                success=ales_percent is not None,
                ales_percent=ales_percent,
                seconds=_parse_float(row['seconds']),
                error=row['error'] or None
            ))
    return results


def export_summary(summary: Dict[str, Any], path: str) -> Path:
    """Write the per-cell summary as JSON"""
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, 'w') as f:
        json.dump(summary, f, indent=2, sort_keys=True)
    return output_path


def _cell_value(value: Optional[float]) -> str:
    return f"{value:8.2f}" if value is not None else f"{'-':>8}"


def render_report(summary: Dict[str, Any]) -> str:
    """Plain-text table of the per-cell summary"""
    lines = [
        "DEMN LOCALIZATION BENCHMARK REPORT",
        "=" * 70,
        "",
        f"Repeats: {summary.get('total_repeats', 0)} "
        f"(failed: {summary.get('failed_repeats', 0)}), alpha = {summary.get('alpha')}",
        "",
        "PER-CELL RESULTS (ALEs in percent)",
        "-" * 70,
        f"{'shape':<7}{'method':<10}{'Na':>4}{'R':>6}{'mean':>9}{'ALA':>9}"
        f"{'ci_low':>9}{'ci_up':>9}{'APG':>9}"
    ]
    for cell in summary.get('cells', []):
        lines.append(
            f"{cell['shape']:<7}{cell['method']:<10}{cell['n_anchors']:>4}{cell['radius']:>6g}"
            f" {_cell_value(cell['mean'])} {_cell_value(cell['ala'])}"
            f" {_cell_value(cell['ci_lower'])} {_cell_value(cell['ci_upper'])}"
            f" {_cell_value(cell['apg_vs'])}"
            + (f"  [{cell['note']}]" if cell.get('note') else "")
        )

    overall = summary.get('overall_ala', {})
    if overall:
        lines += ["", "OVERALL ACCURACY", "-" * 70]
        for method, value in overall.items():
            lines.append(f"{method:<10} ALA = {value:.2f}%")

    lines += ["", "=" * 70, "END OF REPORT"]
    return "\n".join(lines) + "\n"


def create_report(summary: Dict[str, Any], output_path: str) -> Path:
    """Write the plain-text report"""
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_report(summary))
    return path
