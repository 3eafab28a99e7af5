"""
Utility Functions
Result aggregation and export of benchmark results
"""

from .result_aggregator import CellSummary, ResultAggregator
from .export_utils import (
    write_results_csv, load_results_csv, export_summary, render_report, create_report
)

__all__ = [
    'CellSummary',
    'ResultAggregator',
    'write_results_csv',
    'load_results_csv',
    'export_summary',
    'render_report',
    'create_report'
]
