import itertools

import pytest

from bindtw.series import BinarySeries


def all_binary_strings(max_len: int):
    """Every binary string of length 1..max_len, shortest first."""
    for n in range(1, max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


@pytest.fixture(scope="session")
def small_series_pool():
    return [BinarySeries(s) for s in all_binary_strings(6)]
