"""Reduce a pair of binary RLE series to O(1) non-adjacent selection instances.

Model.  In an optimal correspondence every mismatched position lies inside
a "covered" run: a run aligned entirely against opposite-symbol material of
the other series, contributing exactly its length to the distance.  Covered
runs within one series are pairwise non-adjacent (covering two adjacent
runs is always dominated by covering one of them).  Deleting an interior
covered run merges its two equal-symbol neighbors, shrinking the run count
by 2; deleting a boundary run shrinks it by 1 and flips that end's symbol.
The two series must contract to the same alternating symbol sequence,
i.e. agree on first symbol and run count after deletions.

Enumeration.  Whether each series covers its first/last run is forced up
to a choice: ends that already agree cover neither side (covering both is
dominated); ends that disagree cover exactly one side, two ways.  That
yields 1, 2, or 4 boundary combinations.  Per combination, interior covers
all fall on the series with more remaining runs (one per surplus pair;
splitting them across both series is dominated), chosen among its interior
runs minus any run adjacent to a covered boundary run -- exactly a
minimum-weight non-adjacent selection over a contiguous slice of run
lengths, with the boundary-run lengths as a constant offset.

Degenerate cases short-circuit: equal symbol sequences cost 0, and a
single-run series forces covering every opposite run of the other side
(or, for two opposite single runs, full mismatch of the longer series).

The enumerated combinations are each achievable and together dominate all
cover schemes; the exhaustive equivalence suite against the quadratic DP
is the gatekeeper for this casework.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .matching import SubseqInstance
from .series import RleSeries

__all__ = ["ReductionOutput", "reduce_pair", "dtw_zero_test"]


@dataclass(frozen=True)
class ReductionOutput:
    """At most a handful of instances, or an immediate answer for the
    degenerate cases; the distance is the shortcut or the minimum instance
    value."""

    instances: tuple[SubseqInstance, ...]
    shortcut: Optional[int] = None

    def __post_init__(self):
        if self.shortcut is None and not self.instances:
            raise ValueError("reduction must produce instances or a shortcut")


def dtw_zero_test(x: RleSeries, y: RleSeries) -> bool:
    """True iff the run-symbol sequences coincide (distance is zero)."""
    return x.first_symbol == y.first_symbol and x.run_count == y.run_count


def _opposite_run_total(single_symbol: int, other: RleSeries) -> int:
    lengths = other.lengths
    if other.first_symbol == single_symbol:
        sel = lengths[1::2]
    else:
        sel = lengths[0::2]
    return int(sel.sum(dtype=np.int64)) if len(sel) else 0


def reduce_pair(x: RleSeries, y: RleSeries) -> ReductionOutput:
    """Reduce DTW(x, y) to non-adjacent selection instances in O(k + l)."""
    if dtw_zero_test(x, y):
        return ReductionOutput(instances=(), shortcut=0)

    k, l = x.run_count, y.run_count
    if k == 1 or l == 1:
        if k == 1 and l == 1:
            # opposite single runs: every aligned pair mismatches
            return ReductionOutput(
                instances=(), shortcut=max(x.total_length, y.total_length)
            )
        single, other = (x, y) if k == 1 else (y, x)
        # the other side has both symbols, so covering its opposite runs
        # (pairwise non-adjacent by alternation) is forced and sufficient
        return ReductionOutput(
            instances=(), shortcut=_opposite_run_total(single.first_symbol, other)
        )

    first_opts = ((0, 0),) if x.first_symbol == y.first_symbol else ((1, 0), (0, 1))
    last_opts = ((0, 0),) if x.last_symbol == y.last_symbol else ((1, 0), (0, 1))

    px, py = x.lengths, y.lengths
    instances = []
    for fx, fy in first_opts:
        for lx, ly in last_opts:
            if fx and lx and k < 3:
                continue  # both boundary runs of x covered: need them non-adjacent
            if fy and ly and l < 3:
                continue
            kk = k - fx - lx
            ll = l - fy - ly
            if kk < 1 or ll < 1:
                continue
            surplus = kk - ll
            assert surplus % 2 == 0, "end-symbol agreement must force equal parity"
            offset = (
                (int(px[0]) if fx else 0)
                + (int(px[-1]) if lx else 0)
                + (int(py[0]) if fy else 0)
                + (int(py[-1]) if ly else 0)
            )
            if surplus == 0:
                instances.append(SubseqInstance((), 0, offset))
                continue
            if surplus > 0:
                lengths, count, f, lst = px, k, fx, lx
            else:
                lengths, count, f, lst = py, l, fy, ly
            r = abs(surplus) // 2
            # interior runs, excluding any run adjacent to a covered
            # boundary run (1-based run indices lo..hi)
            lo = 2 + f
            hi = count - 1 - lst
            weights = lengths[lo - 1 : hi]
            if r > (len(weights) + 1) // 2:
                continue  # not enough non-adjacent slots
            instances.append(SubseqInstance(weights, r, offset))

    assert instances, "multi-run inputs always admit at least one cover scheme"
    return ReductionOutput(instances=tuple(instances))
