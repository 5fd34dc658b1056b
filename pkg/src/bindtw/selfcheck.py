"""Built-in equivalence suite: the fast paths against the quadratic DP.

Runs an exhaustive sweep over every pair of binary strings up to a length
bound (ordered shortest-first, so the first reported failure is a minimal
one) plus seeded random trials at larger lengths and mixed biases.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Optional

from . import oracle
from ._mix import derive_seed, mix_words, splitmix64
from .api import dtw_linear, dtw_rle
from .gen import GeneratorSpec, generate
from .series import BinarySeries, rle_encode

__all__ = ["SelftestReport", "run_selftest", "MAX_EXHAUSTIVE_LEN"]

MAX_EXHAUSTIVE_LEN = 12

_BIASES = (0.1, 0.5, 0.9)


@dataclass
class SelftestReport:
    max_len: int
    pairs_checked: int
    random_trials: int
    mismatches: int
    first_failure: Optional[dict] = None
    elapsed_ns: int = 0

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "pairs_checked": self.pairs_checked,
            "random_trials": self.random_trials,
            "mismatches": self.mismatches,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


def _compare(x: BinarySeries, y: BinarySeries) -> Optional[dict]:
    a = dtw_linear(x, y).value
    b = dtw_rle(rle_encode(x), rle_encode(y)).value
    c = oracle.dtw_dp(x, y)
    if a == b == c:
        return None
    return {"x": x.to01(), "y": y.to01(), "linear": a, "rle": b, "dp": c}


def run_selftest(max_len: int = 8, trials: int = 10_000, seed: int = 1) -> SelftestReport:
    """Exhaustive pairs up to ``max_len`` plus ``trials`` random pairs."""
    if not (1 <= max_len <= MAX_EXHAUSTIVE_LEN):
        raise ValueError(f"max_len must be in [1, {MAX_EXHAUSTIVE_LEN}]")
    if trials < 0:
        raise ValueError("trials must be >= 0")
    t0 = time.perf_counter_ns()
    strings = [
        BinarySeries("".join(bits))
        for n in range(1, max_len + 1)
        for bits in itertools.product("01", repeat=n)
    ]
    report = SelftestReport(max_len=max_len, pairs_checked=0, random_trials=trials, mismatches=0)
    for x in strings:
        for y in strings:
            report.pairs_checked += 1
            failure = _compare(x, y)
            if failure is not None:
                report.mismatches += 1
                if report.first_failure is None:
                    report.first_failure = failure

    for trial in range(trials):
        ws = mix_words(derive_seed(seed, trial), 2)
        nx = 1 + int(ws[0]) % 500
        ny = 1 + int(ws[1]) % 500
        bias = _BIASES[trial % len(_BIASES)]
        spec = GeneratorSpec("biased", bias)
        x = generate(spec, nx, derive_seed(seed, trial, 0))
        y = generate(spec, ny, derive_seed(seed, trial, 1))
        failure = _compare(x, y)
        if failure is not None:
            report.mismatches += 1
            if report.first_failure is None:
                report.first_failure = failure

    report.elapsed_ns = time.perf_counter_ns() - t0
    return report
