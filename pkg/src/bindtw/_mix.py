"""Deterministic 64-bit mixing primitives shared by generators and sampling.

Counter-based splitmix64: every random word is a pure function of
(seed, counter), so streams are reproducible across platforms and can be
produced out of order or vectorized with numpy.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    """One splitmix64 finalization round of a 64-bit word."""
    z = (z + _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, *salts: int) -> int:
    """Fold salts into a seed, one mixing round per salt."""
    z = seed & _MASK
    for salt in salts:
        z = splitmix64(z ^ (salt & _MASK))
    return z


def mix_words(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Vectorized splitmix64 stream; word i equals the (offset+i+1)-th scalar draw."""
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK) + idx * np.uint64(_GAMMA)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def checksum64(values) -> int:
    """Order-sensitive 64-bit digest of a sequence of integers."""
    h = 0
    for v in values:
        h = splitmix64(h ^ (int(v) & _MASK))
    return h
