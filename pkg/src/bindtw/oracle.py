"""Brute-force references: textbook warping DP and naive selection solvers.

These are the ground truth the fast paths are validated against, so they
share no code with them beyond the input types.  Each solver is written for
obviousness; the warping DP optionally JIT-compiles its inner loop because
the validation suites call it hundreds of thousands of times, but the
compiled function is byte-for-byte the same Python loop.
"""

from __future__ import annotations

import numpy as np

from .matching import Infeasible, SubseqInstance
from .series import BinarySeries

__all__ = ["TooLarge", "dtw_dp", "subseq_dp", "matching_enum", "DEFAULT_CELL_CAP"]

#: n*m ceiling for the quadratic DP.
DEFAULT_CELL_CAP = 10**8

_ENUM_MAX = 24


class TooLarge(ValueError):
    """Input exceeds a brute-force size bound."""


def _dp_rows(a, b):
    # D[i][j] = |a_i - b_j| + min(D[i-1][j], D[i][j-1], D[i-1][j-1]),
    # rolling two rows so memory stays O(len(b)).
    n = a.shape[0]
    m = b.shape[0]
    prev = np.empty(m, np.int64)
    cur = np.empty(m, np.int64)
    prev[0] = 1 if a[0] != b[0] else 0
    for j in range(1, m):
        prev[j] = prev[j - 1] + (1 if a[0] != b[j] else 0)
    for i in range(1, n):
        cur[0] = prev[0] + (1 if a[i] != b[0] else 0)
        for j in range(1, m):
            best = prev[j]
            if prev[j - 1] < best:
                best = prev[j - 1]
            if cur[j - 1] < best:
                best = cur[j - 1]
            cur[j] = best + (1 if a[i] != b[j] else 0)
        prev, cur = cur, prev
    return prev[m - 1]


_dp_kernel = None


def _kernel():
    global _dp_kernel
    if _dp_kernel is None:
        try:
            from numba import njit

            _dp_kernel = njit(cache=True)(_dp_rows)
        except Exception:  # pragma: no cover - numba missing or broken
            _dp_kernel = _dp_rows
    return _dp_kernel


def dtw_dp(x: BinarySeries, y: BinarySeries, cell_cap: int = DEFAULT_CELL_CAP) -> int:
    """Quadratic-time warping distance by the textbook table."""
    n, m = x.n, y.n
    if n * m > cell_cap:
        raise TooLarge(f"{n}x{m} table exceeds cell cap {cell_cap}")
    a, b = x.to_numpy(), y.to_numpy()
    if len(b) > len(a):
        a, b = b, a
    return int(_kernel()(a, b))


def subseq_dp(inst: SubseqInstance) -> int:
    """O(s*r) table for the cheapest r pairwise non-adjacent weights.

    best[j][c] = min(best[j-1][c], best[j-2][c-1] + w_j); answer offset +
    best[s][r].  Kept independent of the incremental matching engine.
    """
    w = inst.weights
    s = len(w)
    r = inst.r
    if r > (s + 1) // 2:
        raise Infeasible(f"r={r} exceeds ceil(s/2) for s={s}")
    inf = 1 << 200
    prev2 = [0] + [inf] * r  # best[j-2][*]
    prev1 = [0] + [inf] * r  # best[j-1][*]
    for j in range(s):
        wj = int(w[j])
        cur = [0] + [inf] * r
        for c in range(1, r + 1):
            take = prev2[c - 1] + wj if prev2[c - 1] < inf else inf
            skip = prev1[c]
            cur[c] = take if take < skip else skip
        prev2, prev1 = prev1, cur
    if prev1[r] >= inf:
        raise Infeasible(f"no {r}-selection exists for s={s}")
    return inst.offset + prev1[r]


def matching_enum(weights, i: int) -> int:
    """Exact minimum over all i-edge matchings by enumerating every valid
    selection of pairwise non-adjacent indices."""
    w = [int(v) for v in weights]
    s = len(w)
    if s > _ENUM_MAX:
        raise TooLarge(f"s={s} exceeds enumeration bound {_ENUM_MAX}")
    if i > (s + 1) // 2:
        raise Infeasible(f"i={i} exceeds ceil(s/2) for s={s}")
    best = [None]

    def walk(start: int, need: int, acc: int) -> None:
        if need == 0:
            if best[0] is None or acc < best[0]:
                best[0] = acc
            return
        # indices start..s-1 must still fit `need` non-adjacent picks
        for j in range(start, s - 2 * (need - 1)):
            walk(j + 2, need - 1, acc + w[j])

    walk(0, i, 0)
    assert best[0] is not None
    return best[0]
