from .metrics import BenchReport, BenchRow, MetricsEngine, run_benchmark
from .verifier import BraidVerifier, TableComparator

__all__ = [
    "BenchReport",
    "BenchRow",
    "MetricsEngine",
    "run_benchmark",
    "BraidVerifier",
    "TableComparator",
]
