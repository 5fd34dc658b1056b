"""Top-level distance dispatch: pick a backend by input form and size.

Raw strings take the linear pipeline (encode -> reduce -> bucket solver
with key bound max(n, m)); RLE inputs take the comparison-based pipeline
(reduce -> tree solver) and never materialize the decoded strings.  The
quadratic reference DP is reachable as an explicit algorithm choice.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Union

from . import oracle
from .matching import solve_bucket, solve_tree
from .reduction import ReductionOutput, reduce_pair
from .series import (
    DEFAULT_DECODE_CAP,
    BinarySeries,
    RleSeries,
    rle_decode,
    rle_encode,
)

__all__ = ["DtwResult", "dtw", "dtw_linear", "dtw_rle", "ALGORITHMS"]

ALGORITHMS = ("auto", "linear", "rle", "dp")

SeriesLike = Union[BinarySeries, RleSeries]


@dataclass(frozen=True)
class DtwResult:
    """Distance value plus provenance."""

    value: int
    algorithm: str  # "linear" | "rle_tree" | "dp"
    n: int
    m: int
    k: int
    l: int
    elapsed_ns: int

    def to_dict(self) -> dict:
        """Flat mapping with fixed key order (stable JSON schema)."""
        return {
            "value": self.value,
            "algorithm": self.algorithm,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "l": self.l,
            "elapsed_ns": self.elapsed_ns,
        }


def _combined_value(out: ReductionOutput, solver) -> int:
    if out.shortcut is not None:
        return out.shortcut
    return min(solver(inst) for inst in out.instances)


def dtw_linear(x: BinarySeries, y: BinarySeries) -> DtwResult:
    """Distance of two raw series in time linear in n + m."""
    t0 = time.perf_counter_ns()
    rx, ry = rle_encode(x), rle_encode(y)
    out = reduce_pair(rx, ry)
    bound = max(x.n, y.n)
    value = _combined_value(out, lambda inst: solve_bucket(inst, bound))
    elapsed = time.perf_counter_ns() - t0
    return DtwResult(value, "linear", x.n, y.n, rx.run_count, ry.run_count, elapsed)


def dtw_rle(x: RleSeries, y: RleSeries) -> DtwResult:
    """Distance of two RLE series in near-linear time in the run counts;
    decoded lengths may exceed memory."""
    t0 = time.perf_counter_ns()
    out = reduce_pair(x, y)
    value = _combined_value(out, solve_tree)
    elapsed = time.perf_counter_ns() - t0
    return DtwResult(
        value,
        "rle_tree",
        x.total_length,
        y.total_length,
        x.run_count,
        y.run_count,
        elapsed,
    )


def _dtw_reference(x: BinarySeries, y: BinarySeries) -> DtwResult:
    rx, ry = rle_encode(x), rle_encode(y)
    t0 = time.perf_counter_ns()
    value = oracle.dtw_dp(x, y)
    elapsed = time.perf_counter_ns() - t0
    return DtwResult(value, "dp", x.n, y.n, rx.run_count, ry.run_count, elapsed)


def _as_raw(v: SeriesLike, cap: int) -> BinarySeries:
    return v if isinstance(v, BinarySeries) else rle_decode(v, cap)


def _as_rle(v: SeriesLike) -> RleSeries:
    return v if isinstance(v, RleSeries) else rle_encode(v)


def dtw(
    x: SeriesLike,
    y: SeriesLike,
    algo: str = "auto",
    materialize_cap: int = DEFAULT_DECODE_CAP,
) -> DtwResult:
    """Compute the distance with an explicit or automatic backend.

    ``auto`` picks the RLE path when either input arrives run-length
    encoded with a decoded length above the materialization cap, else the
    linear path.  All algorithms return equal values on equal inputs.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")
    if algo == "auto":
        needs_rle = any(
            isinstance(v, RleSeries) and v.total_length > materialize_cap for v in (x, y)
        )
        if needs_rle or (isinstance(x, RleSeries) and isinstance(y, RleSeries)):
            algo = "rle"
        else:
            algo = "linear"
    if algo == "rle":
        return dtw_rle(_as_rle(x), _as_rle(y))
    if algo == "linear":
        return dtw_linear(_as_raw(x, materialize_cap), _as_raw(y, materialize_cap))
    return _dtw_reference(_as_raw(x, materialize_cap), _as_raw(y, materialize_cap))
