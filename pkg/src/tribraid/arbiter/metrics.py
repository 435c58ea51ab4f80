import logging
import time

import numpy as np
from pydantic import BaseModel, Field

from tribraid.braids.garside import classify_family, conjugate_to_lambda, normal_form
from tribraid.braids.word import random_word
from tribraid.core.errors import NotPositiveError

logger = logging.getLogger(__name__)


class BenchRow(BaseModel):
    """
    Timings of the normal form + summit conjugation + classification pipeline
    at one word length.
    """

    length: int
    trials: int
    median_ms: float
    min_ms: float
    max_ms: float


class BenchReport(BaseModel):
    rows: list[BenchRow] = Field(default_factory=list)
    # t(last) / t(first) and the same ratio for an exactly linear algorithm
    ratio: float | None = None
    linear_ratio: float | None = None
    # slope of log t against log length
    scaling_exponent: float | None = None


class MetricsEngine:
    """
    Calculates scaling statistics from raw benchmark timings.
    """

    @staticmethod
    def summarize(length: int, samples_ms: list[float]) -> BenchRow:
        data = np.asarray(samples_ms, dtype=float)
        return BenchRow(
            length=length,
            trials=len(samples_ms),
            median_ms=round(float(np.median(data)), 3) if data.size else 0.0,
            min_ms=round(float(data.min()), 3) if data.size else 0.0,
            max_ms=round(float(data.max()), 3) if data.size else 0.0,
        )

    @staticmethod
    def compute_report(rows: list[BenchRow]) -> BenchReport:
        """
        Ratio of the median times of the longest and the shortest nonzero length,
        plus a least-squares scaling exponent when at least two lengths are timed.
        """
        timed = sorted(
            (r for r in rows if r.length > 0 and r.median_ms > 0), key=lambda r: r.length
        )
        if len(timed) < 2:
            return BenchReport(rows=rows)

        first, last = timed[0], timed[-1]
        logs = np.log([[r.length, r.median_ms] for r in timed])
        slope = float(np.polyfit(logs[:, 0], logs[:, 1], 1)[0])
        return BenchReport(
            rows=rows,
            ratio=round(last.median_ms / first.median_ms, 3),
            linear_ratio=round(last.length / first.length, 3),
            scaling_exponent=round(slope, 3),
        )


def pipeline_once(length: int, rng: np.random.Generator) -> float:
    """Milliseconds for one random signed word; inverse letters are included."""
    w = random_word(3, length, rng)
    start = time.perf_counter()
    nf = normal_form(w)
    conjugate_to_lambda(nf)
    try:
        classify_family(nf)
    except NotPositiveError:
        pass
    return (time.perf_counter() - start) * 1000


def run_benchmark(lengths: list[int], trials: int, seed: int) -> BenchReport:
    rng = np.random.default_rng(seed)
    rows = []
    for length in lengths:
        samples = [pipeline_once(length, rng) for _ in range(trials)]
        row = MetricsEngine.summarize(length, samples)
        logger.info(f"length {length}: median {row.median_ms:.2f} ms over {trials} trials")
        rows.append(row)
    return MetricsEngine.compute_report(rows)
