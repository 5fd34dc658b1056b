import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bindtw.matching import (
    Exhausted,
    Infeasible,
    KeyBoundExceeded,
    MatchingState,
    SubseqInstance,
    delta_trace,
    solve_bucket,
    solve_tree,
)
from bindtw.oracle import matching_enum, subseq_dp

weight_lists = st.lists(st.integers(1, 20), min_size=0, max_size=16)


def brute_min_nonadjacent(w, r):
    """Independent check: enumerate selections recursively."""
    best = None

    def walk(start, need, acc):
        nonlocal best
        if need == 0:
            best = acc if best is None or acc < best else best
            return
        for j in range(start, len(w) - 2 * (need - 1)):
            walk(j + 2, need - 1, acc + w[j])

    walk(0, r, 0)
    return best


class TestSubseqInstance:
    def test_rejects_nonpositive_weights(self):
        with pytest.raises(ValueError):
            SubseqInstance((3, 0, 2), 1)

    def test_rejects_infeasible_r(self):
        with pytest.raises(Infeasible):
            SubseqInstance((2, 9), 2)

    def test_empty_weights_r0(self):
        inst = SubseqInstance((), 0, offset=5)
        assert solve_tree(inst) == 5

    def test_numpy_weights(self):
        inst = SubseqInstance(np.array([5, 1, 5], dtype=np.int64), 1)
        assert solve_tree(inst) == 1

    def test_immutable(self):
        inst = SubseqInstance((1, 2), 1)
        with pytest.raises(AttributeError):
            inst.r = 0


class TestSolverExamples:
    # expected values frozen from the enumeration oracle
    def test_single_minimum(self):
        assert solve_tree(SubseqInstance((5, 1, 5), 1)) == 1

    def test_two_of_five(self):
        inst = SubseqInstance((3, 1, 4, 1, 5), 2)
        assert brute_min_nonadjacent((3, 1, 4, 1, 5), 2) == 2
        assert solve_tree(inst) == 2

    def test_forced_augment(self):
        inst = SubseqInstance((4, 1, 4), 2)
        assert brute_min_nonadjacent((4, 1, 4), 2) == 8
        assert solve_tree(inst) == 8
        assert delta_trace(inst) == [1, 7]

    def test_bucket_examples(self):
        assert solve_bucket(SubseqInstance((1, 10, 1, 10, 1), 3), 23) == 3
        assert delta_trace(SubseqInstance((1, 10, 1, 10, 1), 3)) == [1, 1, 1]
        assert solve_bucket(SubseqInstance((4, 1, 4), 2), 9) == 8
        assert solve_bucket(SubseqInstance((7,), 0), 7) == 0

    def test_trace_single(self):
        assert delta_trace(SubseqInstance((6, 2, 9), 1)) == [2]

    def test_key_bound_violation(self):
        with pytest.raises(KeyBoundExceeded):
            solve_bucket(SubseqInstance((4, 1, 4), 2), 5)
        with pytest.raises(KeyBoundExceeded):
            solve_bucket(SubseqInstance((9, 1), 1), 3)

    def test_offset_added(self):
        assert solve_tree(SubseqInstance((5, 1, 5), 1, offset=100)) == 101
        assert solve_bucket(SubseqInstance((5, 1, 5), 1, offset=100), 11) == 101


class TestStep:
    def test_step_merges_chain(self):
        state = MatchingState(SubseqInstance((4, 1, 4), 2))
        assert state.step() == 1
        assert state.chains() == [(2, 2)]
        assert state.step() == 7
        assert state.chains() == [(1, 3)]
        with pytest.raises(Exhausted):
            state.step()

    def test_step_all_ones(self):
        state = MatchingState(SubseqInstance((1, 1, 1), 1))
        assert state.step() == 1
        assert state.step() == 1
        assert state.edges() == [1, 3]

    def test_fresh_state_picks_minimum(self):
        state = MatchingState(SubseqInstance((9, 3, 7, 3), 2))
        assert state.step() == 3
        assert state.chains() == [(2, 2)]

    def test_double_merge(self):
        # picking the middle empty slot welds three chains into one
        state = MatchingState(SubseqInstance((1, 50, 50, 1, 50, 50, 1), 3))
        for _ in range(3):
            state.step()
        assert state.edges() == [1, 4, 7]
        assert state.chains() == [(1, 7)]

    def test_exhausted_at_max(self):
        state = MatchingState(SubseqInstance((2, 3), 1))
        state.step()
        with pytest.raises(Exhausted):
            state.step()


class TestOracleEquivalence:
    def test_exhaustive_small(self):
        # every weight vector over {1..4} up to s=6, every feasible r
        def vectors(s):
            if s == 0:
                yield ()
                return
            for rest in vectors(s - 1):
                for v in range(1, 5):
                    yield rest + (v,)

        for s in range(0, 7):
            for w in vectors(s):
                total = sum(w)
                for r in range((s + 1) // 2 + 1):
                    inst = SubseqInstance(w, r)
                    expect = subseq_dp(inst)
                    assert solve_tree(inst) == expect, (w, r)
                    assert solve_bucket(inst, max(total, 1)) == expect, (w, r)

    @given(weight_lists, st.data())
    @settings(max_examples=400, deadline=None)
    def test_random_instances(self, w, data):
        r = data.draw(st.integers(0, (len(w) + 1) // 2))
        inst = SubseqInstance(w, r)
        expect = subseq_dp(inst)
        assert solve_tree(inst) == expect
        assert solve_bucket(inst, max(sum(w), 1)) == expect

    def test_large_random_instances(self):
        rng = random.Random(7)
        for _ in range(60):
            s = rng.randint(1, 4000)
            w = [rng.randint(1, 10**6) for _ in range(s)]
            r = rng.randint(0, (s + 1) // 2)
            inst = SubseqInstance(w, r)
            expect = subseq_dp(inst)
            assert solve_tree(inst) == expect
            assert solve_bucket(inst, sum(w)) == expect

    def test_huge_weights_tree(self):
        w = [1 << 40, 3, 1 << 41, 5, 1 << 39]
        inst = SubseqInstance(w, 2)
        assert solve_tree(inst) == subseq_dp(inst)


class TestDeltaProperties:
    @given(weight_lists, st.data())
    @settings(max_examples=300, deadline=None)
    def test_monotone_and_telescoping(self, w, data):
        r = data.draw(st.integers(0, (len(w) + 1) // 2))
        inst = SubseqInstance(w, r)
        trace = delta_trace(inst)
        assert len(trace) == r
        assert all(a <= b for a, b in zip(trace, trace[1:]))
        assert sum(trace) + inst.offset == solve_tree(inst)
        if trace:
            assert trace[0] == min(w)

    def test_intermediate_optimality(self):
        rng = random.Random(20)
        for _ in range(300):
            s = rng.randint(0, 14)
            w = [rng.randint(1, 20) for _ in range(s)]
            state = MatchingState(SubseqInstance(w, 0))
            for i in range(1, (s + 1) // 2 + 1):
                state.step()
                assert state.weight == matching_enum(w, i), (w, i)
                edges = state.edges()
                assert all(b - a >= 2 for a, b in zip(edges, edges[1:]))

    def test_backends_agree_on_trace_values(self):
        rng = random.Random(3)
        for _ in range(200):
            s = rng.randint(1, 40)
            w = [rng.randint(1, 30) for _ in range(s)]
            r = rng.randint(0, (s + 1) // 2)
            inst = SubseqInstance(w, r)
            tree = MatchingState(inst, backend="tree")
            bucket = MatchingState(inst, backend="bucket", key_bound=sum(w))
            for _ in range(r):
                assert tree.step() == bucket.step()
