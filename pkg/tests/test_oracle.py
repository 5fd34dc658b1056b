import random

import pytest

from bindtw.matching import Infeasible, SubseqInstance
from bindtw.oracle import TooLarge, dtw_dp, matching_enum, subseq_dp
from bindtw.series import BinarySeries, random_expansion


class TestDtwDp:
    def test_identical(self):
        x = BinarySeries("0101")
        assert dtw_dp(x, x) == 0

    def test_middle_one_must_pair(self):
        assert dtw_dp(BinarySeries("010"), BinarySeries("0")) == 1

    def test_forced_mismatch(self):
        assert dtw_dp(BinarySeries("0"), BinarySeries("1")) == 1

    def test_opposite_blocks(self):
        assert dtw_dp(BinarySeries("000"), BinarySeries("1")) == 3
        assert dtw_dp(BinarySeries("01"), BinarySeries("10")) == 2

    def test_cell_cap(self):
        x = BinarySeries("0" * 200)
        with pytest.raises(TooLarge):
            dtw_dp(x, x, cell_cap=100)

    def test_symmetry(self, small_series_pool):
        rng = random.Random(5)
        pool = rng.sample(small_series_pool, 30)
        for x in pool:
            for y in pool:
                assert dtw_dp(x, y) == dtw_dp(y, x)

    def test_expansion_invariance(self, small_series_pool):
        rng = random.Random(6)
        for _ in range(100):
            x, y = rng.sample(small_series_pool, 2)
            base = dtw_dp(x, y)
            grown = random_expansion(x, rng.randint(0, 10), rng.getrandbits(63))
            assert dtw_dp(grown, y) == base


class TestSubseqDp:
    def test_examples(self):
        assert subseq_dp(SubseqInstance((3, 1, 4, 1, 5), 2)) == 2
        assert subseq_dp(SubseqInstance((4, 1, 4), 2)) == 8

    def test_r_zero_returns_offset(self):
        assert subseq_dp(SubseqInstance((9, 9, 9), 0, offset=4)) == 4
        assert subseq_dp(SubseqInstance((), 0)) == 0

    def test_infeasible_rechecked(self):
        # r > ceil(s/2) is rejected at construction; subseq_dp re-checks in
        # case an instance is forged around the constructor
        forged = object.__new__(SubseqInstance)
        object.__setattr__(forged, "weights", (2, 9))
        object.__setattr__(forged, "r", 2)
        object.__setattr__(forged, "offset", 0)
        with pytest.raises(Infeasible):
            subseq_dp(forged)


class TestMatchingEnum:
    def test_examples(self):
        assert matching_enum((1, 10, 1, 10, 1), 2) == 2
        assert matching_enum((7,), 1) == 7
        assert matching_enum((4, 1, 4), 1) == 1

    def test_enumeration_bound(self):
        with pytest.raises(TooLarge):
            matching_enum([1] * 25, 1)

    def test_consistency_with_subseq_dp(self):
        rng = random.Random(11)
        for _ in range(200):
            s = rng.randint(0, 12)
            w = [rng.randint(1, 50) for _ in range(s)]
            for i in range((s + 1) // 2 + 1):
                assert matching_enum(w, i) == subseq_dp(SubseqInstance(w, i)), (w, i)
