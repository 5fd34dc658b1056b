"""Minimum-weight r-edge matching on a weighted path graph.

The problem: given positive weights w_1..w_s on the edges of a path, pick r
pairwise non-adjacent edges of minimum total weight.  The engine grows an
optimal matching one edge at a time: every step replaces one maximal chain
(edges at stride 2) by its augmentation (the chain shifted outward by one,
one edge longer) choosing the candidate with the smallest weight increase.
Successive increases are nondecreasing, which makes a forward-scanning
bucket queue a valid candidate structure and gives the linear-time backend;
the comparison-based backend uses an ordered structure instead.

Candidates are (a) interior maximal chains, whose augmentation gains an
edge on both flanks, and (b) "empty" candidates at index j, alive while
e_{j-1}, e_j, e_{j+1} are all unmatched, whose augmentation is {e_j}.
Chains touching either end of the path cannot grow and are never
candidates.  All empty candidates exist up front, so they live in a
presorted static stream; chains created later go to a small dynamic
overlay (a lazy-deletion heap, or buckets scanned by a monotone counter).
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Optional, Sequence, Union

import numpy as np

__all__ = [
    "Infeasible",
    "Exhausted",
    "KeyBoundExceeded",
    "SubseqInstance",
    "MatchingState",
    "solve_tree",
    "solve_bucket",
    "delta_trace",
]

_MAX_TOTAL = (1 << 63) - 1
_NUMPY_CUTOFF = 1024


class Infeasible(ValueError):
    """Requested selection size exceeds the largest matching, ceil(s/2)."""


class Exhausted(RuntimeError):
    """step() called on a state that already holds a maximum matching."""


class KeyBoundExceeded(RuntimeError):
    """A candidate key fell outside the bucket array; caller bug."""


class SubseqInstance:
    """Weights w_1..w_s, a target count r, and a constant offset.

    The value of the instance is offset plus the minimum of sum(w[i_j])
    over index sequences i_1 < ... < i_r with i_{j+1} - i_j >= 2.
    """

    __slots__ = ("weights", "r", "offset")

    def __init__(self, weights: Union[Sequence[int], np.ndarray], r: int, offset: int = 0):
        if isinstance(weights, np.ndarray):
            w = np.ascontiguousarray(weights, dtype=np.int64)
            if len(w) and int(w.min()) < 1:
                raise ValueError("all weights must be >= 1")
            total = _total_weight(w)
            if w.flags.writeable:
                w.flags.writeable = False
        else:
            w = tuple(int(v) for v in weights)
            if any(v < 1 for v in w):
                raise ValueError("all weights must be >= 1")
            total = sum(w)
        if total > _MAX_TOTAL:
            raise ValueError("total weight exceeds 2**63-1")
        s = len(w)
        if not (0 <= int(r) <= (s + 1) // 2):
            raise Infeasible(f"r={r} not in [0, ceil(s/2)] for s={s}")
        if int(offset) < 0:
            raise ValueError("offset must be >= 0")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "offset", int(offset))

    def __setattr__(self, name, value):
        raise AttributeError("SubseqInstance is immutable")

    @property
    def s(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        if isinstance(self.weights, tuple):
            return sum(self.weights)
        return _total_weight(self.weights)

    def weights_list(self) -> list[int]:
        return [int(v) for v in self.weights]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubseqInstance)
            and self.r == other.r
            and self.offset == other.offset
            and self.weights_list() == other.weights_list()
        )

    def __repr__(self) -> str:
        w = self.weights_list()
        body = w if len(w) <= 12 else f"<{len(w)} weights>"
        return f"SubseqInstance(weights={body}, r={self.r}, offset={self.offset})"


def _total_weight(w: np.ndarray) -> int:
    if len(w) == 0:
        return 0
    estimate = float(w.sum(dtype=np.float64))
    if estimate < 4.0e18:
        return int(w.sum(dtype=np.int64))
    return sum(int(v) for v in w)


class _Chain:
    """A maximal chain of matched edges at stride 2, stored by endpoints."""

    __slots__ = ("left", "right", "serial")

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        self.serial = None  # live candidate-entry id, None if not a candidate


class _StaticStream:
    """Empty-chain candidates presorted by (weight, index), with eager
    invalidation by index and a forward-only cursor."""

    __slots__ = ("_order", "_pos", "_dead", "_keys", "_chunked")

    def __init__(self, w, s: int, budget: int):
        self._pos = 0
        self._dead = bytearray(s + 3)
        self._chunked = False
        if s == 0:
            self._order = ()
            self._keys = ()
            return
        if s <= _NUMPY_CUTOFF:
            order = sorted(range(1, s + 1), key=lambda j: w[j - 1])
            self._order = order
            self._keys = [int(w[j - 1]) for j in order]
            return
        arr = np.asarray(w, dtype=np.int64)
        m = 3 * budget + 8
        if m < s // 4:
            # Only the smallest keys can ever be reached within the step
            # budget (cursor advance <= 3*budget + 1), so a partial select
            # avoids sorting the whole array.
            part = np.argpartition(arr, m)[:m]
            part = part[np.lexsort((part, arr[part]))]
            order = part + 1
            self._chunked = True
        else:
            kmax = int(arr.max())
            if kmax < (1 << 15):
                order = np.argsort(arr.astype(np.int16), kind="stable") + 1
            elif kmax < (1 << 31):
                order = np.argsort(arr.astype(np.int32), kind="stable") + 1
            else:
                order = np.argsort(arr, kind="stable") + 1
        self._order = order
        self._keys = arr[order - 1]

    def peek(self) -> Optional[tuple[int, int]]:
        order, dead = self._order, self._dead
        pos = self._pos
        n = len(order)
        while pos < n:
            j = int(order[pos])
            if not dead[j]:
                self._pos = pos
                return int(self._keys[pos]), j
            pos += 1
        self._pos = pos
        if self._chunked and pos >= n:
            # the budget proof guarantees the chunk is never fully consumed
            raise AssertionError("static candidate chunk exhausted; step budget violated")
        return None

    def pop(self) -> None:
        self._pos += 1

    def kill(self, j: int) -> None:
        if 1 <= j < len(self._dead):
            self._dead[j] = 1


class _HeapOverlay:
    """Lazy-deletion binary heap over dynamically created chain candidates."""

    __slots__ = ("_heap", "_alive", "_next_serial", "count")

    def __init__(self):
        self._heap: list[tuple[int, int, int]] = []
        self._alive: dict[int, _Chain] = {}
        self._next_serial = 0
        self.count = 0

    def push(self, key: int, left: int, chain: _Chain) -> None:
        serial = self._next_serial
        self._next_serial = serial + 1
        chain.serial = serial
        self._alive[serial] = chain
        heapq.heappush(self._heap, (key, left, serial))
        self.count += 1

    def invalidate(self, chain: _Chain) -> None:
        if chain.serial is not None:
            self._alive.pop(chain.serial, None)
            chain.serial = None
            self.count -= 1

    def peek(self) -> Optional[tuple[int, int, int]]:
        heap = self._heap
        while heap and heap[0][2] not in self._alive:
            heapq.heappop(heap)
        return heap[0] if heap else None

    def pop(self) -> _Chain:
        key, left, serial = heapq.heappop(self._heap)
        chain = self._alive.pop(serial)
        chain.serial = None
        self.count -= 1
        return chain


class _BucketOverlay:
    """Dynamic chain candidates in integer buckets; entries are unlinked
    lazily (an entry is live while its serial matches the chain's)."""

    __slots__ = ("_buckets", "_next_serial", "count", "key_bound")

    def __init__(self, key_bound: int):
        self._buckets: dict[int, deque[tuple[int, _Chain]]] = {}
        self._next_serial = 0
        self.count = 0
        self.key_bound = key_bound

    def push(self, key: int, left: int, chain: _Chain) -> None:
        if key > self.key_bound:
            raise KeyBoundExceeded(f"candidate key {key} exceeds key bound {self.key_bound}")
        serial = self._next_serial
        self._next_serial = serial + 1
        chain.serial = serial
        bucket = self._buckets.get(key)
        if bucket is None:
            self._buckets[key] = bucket = deque()
        bucket.append((serial, chain))
        self.count += 1

    def invalidate(self, chain: _Chain) -> None:
        if chain.serial is not None:
            chain.serial = None
            self.count -= 1

    def pop_at(self, t: int) -> Optional[_Chain]:
        bucket = self._buckets.get(t)
        if not bucket:
            return None
        while bucket:
            serial, chain = bucket.popleft()
            if chain.serial == serial:
                if not bucket:
                    del self._buckets[t]
                chain.serial = None
                self.count -= 1
                return chain
        del self._buckets[t]
        return None


class MatchingState:
    """Incremental matching engine over one instance.

    Single-owner mutable: one logical thread drives step().  ``backend`` is
    "tree" (ordered candidate structure, O(s log s) total) or "bucket"
    (monotone bucket queue; requires ``key_bound`` >= the largest possible
    key, O(s + key_bound) total).

    ``step_budget`` caps how many steps will ever be taken and lets the
    static stream presort only a proportional chunk; the default allows
    stepping all the way to the maximum matching.
    """

    def __init__(
        self,
        inst: SubseqInstance,
        backend: str = "tree",
        key_bound: Optional[int] = None,
        step_budget: Optional[int] = None,
    ):
        w = inst.weights
        s = len(w)
        self._s = s
        self._max_size = (s + 1) // 2
        if step_budget is None:
            step_budget = self._max_size
        self._budget = min(step_budget, self._max_size)
        self._i = 0
        self._weight = 0
        self._last_delta = 0
        self._marks: dict[int, _Chain] = {}

        if backend == "tree":
            self._overlay = _HeapOverlay()
            self._bucketed = False
        elif backend == "bucket":
            if key_bound is None or key_bound < 1:
                raise ValueError("bucket backend requires a positive key_bound")
            self._overlay = _BucketOverlay(int(key_bound))
            self._bucketed = True
            self._t = 0
        else:
            raise ValueError(f"unknown backend {backend!r}")

        self._static = _StaticStream(w, s, self._budget)
        if self._bucketed and s:
            top = int(max(w)) if isinstance(w, tuple) else int(np.asarray(w).max())
            if top > key_bound:
                raise KeyBoundExceeded(
                    f"initial candidate key {top} exceeds key bound {key_bound}"
                )

        # strided prefix sums: sp[i] = w_i + w_{i-2} + ..., one per parity,
        # so any chain weight is a difference of two entries.
        if isinstance(w, tuple):
            sp = [0] * (s + 1)
            for i in range(1, s + 1):
                sp[i] = w[i - 1] + (sp[i - 2] if i >= 2 else 0)
            self._sp = sp
        else:
            sp = np.zeros(s + 1, dtype=np.int64)
            sp[1::2] = np.cumsum(w[0::2])
            sp[2::2] = np.cumsum(w[1::2])
            self._sp = sp

    # -- inspection -------------------------------------------------------

    @property
    def size(self) -> int:
        """Number of matched edges."""
        return self._i

    @property
    def weight(self) -> int:
        """Total weight of the current matching (offset not included)."""
        return self._weight

    @property
    def last_delta(self) -> int:
        if self._bucketed:
            return self._t
        return self._last_delta if self._i else 0

    def chains(self) -> list[tuple[int, int]]:
        """Maximal chains as (left edge, right edge) pairs, sorted."""
        seen = []
        for endpoint, chain in self._marks.items():
            if endpoint == chain.left:
                seen.append((chain.left, chain.right))
        return sorted(seen)

    def edges(self) -> list[int]:
        """All matched edge indices, ascending."""
        out: list[int] = []
        for left, right in self.chains():
            out.extend(range(left, right + 1, 2))
        return sorted(out)

    # -- core -------------------------------------------------------------

    def _chain_wt(self, a: int, b: int) -> int:
        base = self._sp[a - 2] if a >= 2 else 0
        return int(self._sp[b]) - int(base)

    def _pop_min(self):
        if self._bucketed:
            return self._pop_bucket()
        return self._pop_tree()

    def _pop_tree(self):
        st = self._static.peek()
        ov = self._overlay.peek()
        if st is None and ov is None:
            raise Exhausted("no augmenting candidate remains")
        if ov is None or (st is not None and (st[0], st[1]) < (ov[0], ov[1])):
            self._static.pop()
            self._last_delta = st[0]
            return st[0], None, st[1]
        chain = self._overlay.pop()
        self._last_delta = ov[0]
        return ov[0], chain, None

    def _pop_bucket(self):
        overlay = self._overlay
        st = self._static.peek()
        t = self._t
        if overlay.count == 0:
            if st is None:
                raise Exhausted("no augmenting candidate remains")
            if st[0] > t:
                t = st[0]
        while t <= overlay.key_bound:
            if st is not None and st[0] == t:
                self._static.pop()
                self._t = t
                return t, None, st[1]
            chain = overlay.pop_at(t)
            if chain is not None:
                self._t = t
                return t, chain, None
            t += 1
            if overlay.count == 0:
                if st is None:
                    raise Exhausted("no augmenting candidate remains")
                if st[0] > t:
                    t = st[0]
        raise Exhausted("no augmenting candidate remains")

    def step(self) -> int:
        """Augment to the next larger optimal matching; returns the weight
        increase.  Raises Exhausted once the matching is maximum."""
        if self._i >= self._max_size:
            raise Exhausted(f"matching already maximum at {self._i} edges")
        if self._i >= self._budget:
            raise RuntimeError("step budget exhausted; construct with a larger step_budget")
        delta, chain, j = self._pop_min()
        marks = self._marks
        static = self._static

        if chain is None:
            new_l = new_r = j
            static.kill(j - 1)
            static.kill(j + 1)
            chain = _Chain(j, j)
        else:
            l, r = chain.left, chain.right
            new_l, new_r = l - 1, r + 1
            static.kill(new_l - 1)
            static.kill(new_r + 1)
            del marks[l]
            if r != l:
                del marks[r]
            chain.left, chain.right = new_l, new_r

        # the augmented chain may adjoin an existing chain on either flank;
        # absorb it and retire its candidacy
        nbr = marks.pop(new_l - 2, None)
        if nbr is not None:
            assert nbr.right == new_l - 2, "left neighbor must end just below the new span"
            self._overlay.invalidate(nbr)
            if nbr.left != new_l - 2:
                del marks[nbr.left]
            chain.left = nbr.left
        nbr = marks.pop(new_r + 2, None)
        if nbr is not None:
            assert nbr.left == new_r + 2, "right neighbor must start just above the new span"
            self._overlay.invalidate(nbr)
            if nbr.right != new_r + 2:
                del marks[nbr.right]
            chain.right = nbr.right

        marks[chain.left] = chain
        marks[chain.right] = chain
        if chain.left >= 2 and chain.right <= self._s - 1:
            key = self._chain_wt(chain.left - 1, chain.right + 1) - self._chain_wt(
                chain.left, chain.right
            )
            if self._bucketed:
                assert key >= self._t, "bucket invariant: key below scan counter"
            self._overlay.push(key, chain.left, chain)

        self._i += 1
        self._weight += delta
        return delta


def _check_feasible(inst: SubseqInstance) -> None:
    if inst.r > (inst.s + 1) // 2:
        raise Infeasible(f"r={inst.r} exceeds ceil(s/2) for s={inst.s}")


def solve_tree(inst: SubseqInstance) -> int:
    """Instance value using the comparison-based candidate structure."""
    _check_feasible(inst)
    state = MatchingState(inst, backend="tree", step_budget=inst.r)
    total = inst.offset
    for _ in range(inst.r):
        total += state.step()
    return total


def solve_bucket(inst: SubseqInstance, key_bound: int) -> int:
    """Instance value using the monotone bucket queue.

    ``key_bound`` must be at least the total weight (callers pass
    max(n, m) when weights are run lengths of strings with lengths n, m).
    """
    _check_feasible(inst)
    state = MatchingState(inst, backend="bucket", key_bound=key_bound, step_budget=inst.r)
    total = inst.offset
    for _ in range(inst.r):
        total += state.step()
    return total


def delta_trace(inst: SubseqInstance) -> list[int]:
    """The per-step weight increases (Delta_1, ..., Delta_r); nondecreasing,
    and offset + sum equals the solver value."""
    _check_feasible(inst)
    state = MatchingState(inst, backend="tree", step_budget=inst.r)
    return [state.step() for _ in range(inst.r)]
