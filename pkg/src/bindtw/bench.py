"""Benchmark harness: timed distance runs over deterministic inputs.

Rows are keyed by (generator, size, algorithm); the checksum folds the
distance values of all trials (never the timings), so rows for the same
generator, size, and seed must carry equal checksums across algorithms.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .api import dtw
from .gen import checksum64, generate_pair, parse_generator

__all__ = ["BenchRow", "BenchReport", "run_bench"]


@dataclass(frozen=True)
class BenchRow:
    generator: str
    size: int
    algorithm: str
    median_ns: int
    checksum: int

    def to_dict(self) -> dict:
        return {
            "generator": self.generator,
            "size": self.size,
            "algorithm": self.algorithm,
            "median_ns": self.median_ns,
            "checksum": self.checksum,
        }


@dataclass(frozen=True)
class BenchReport:
    seed: int
    trials: int
    rows: tuple[BenchRow, ...]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "rows": [row.to_dict() for row in self.rows],
        }


def run_bench(
    generator: str,
    sizes: list[int],
    trials: int = 3,
    seed: int = 7,
    algos: tuple[str, ...] = ("linear",),
) -> BenchReport:
    """Run trials for every (size, algo) cell; rows in loop order."""
    spec = parse_generator(generator)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not sizes:
        raise ValueError("at least one size is required")
    rows = []
    for size in sizes:
        for algo in algos:
            values = []
            times = []
            for trial in range(trials):
                x, y = generate_pair(spec, size, seed, trial)
                result = dtw(x, y, algo=algo)
                values.append(result.value)
                times.append(result.elapsed_ns)
            rows.append(
                BenchRow(
                    generator=str(spec),
                    size=size,
                    algorithm=algo,
                    median_ns=int(statistics.median(times)),
                    checksum=checksum64(values),
                )
            )
    return BenchReport(seed=seed, trials=trials, rows=tuple(rows))
