"""Deterministic series generators for benchmarks and self-tests.

Everything derives from a counter-based splitmix64 stream (see _mix), so a
(generator, size, seed, trial, side) tuple always produces the same series
on every platform, with no global RNG state.

Generator specs are strings: ``uniform``, ``alternating``, ``biased:P``
(P the probability of a 1), ``few_runs:K`` (RLE series with exactly K runs
whose lengths sum to the requested size).
"""

from __future__ import annotations

from typing import Union

import numpy as np

from ._mix import checksum64, derive_seed, mix_words, splitmix64
from .series import BinarySeries, RleSeries

__all__ = [
    "GeneratorSpec",
    "parse_generator",
    "generate",
    "generate_pair",
    "checksum64",
    "GENERATOR_NAMES",
]

GENERATOR_NAMES = ("uniform", "biased", "few_runs", "alternating")


class GeneratorSpec:
    """Parsed generator name plus its parameter, if any."""

    __slots__ = ("name", "param")

    def __init__(self, name: str, param: Union[float, int, None] = None):
        if name not in GENERATOR_NAMES:
            raise ValueError(f"unknown generator {name!r}; expected one of {GENERATOR_NAMES}")
        if name == "biased":
            if param is None or not (0.0 < float(param) < 1.0):
                raise ValueError("biased generator needs a bias in (0, 1), e.g. biased:0.1")
            param = float(param)
        elif name == "few_runs":
            if param is None or int(param) < 1:
                raise ValueError("few_runs generator needs a positive run count, e.g. few_runs:1000")
            param = int(param)
        elif param is not None:
            raise ValueError(f"generator {name!r} takes no parameter")
        self.name = name
        self.param = param

    def __str__(self) -> str:
        if self.param is None:
            return self.name
        return f"{self.name}:{self.param:g}" if self.name == "biased" else f"{self.name}:{self.param}"

    @property
    def rle_native(self) -> bool:
        return self.name == "few_runs"


def parse_generator(spec: str) -> GeneratorSpec:
    name, sep, param = spec.partition(":")
    if not sep:
        return GeneratorSpec(name)
    if name == "biased":
        return GeneratorSpec(name, float(param))
    return GeneratorSpec(name, int(param))


def _bits_threshold(n: int, seed: int, p: float) -> BinarySeries:
    words = mix_words(seed, n)
    cut = np.uint64(min(int(p * 2.0**64), (1 << 64) - 1))
    bits = (words < cut).astype(np.uint8)
    return BinarySeries(bits)


def _alternating(n: int) -> BinarySeries:
    bits = np.empty(n, dtype=np.uint8)
    bits[0::2] = 0
    bits[1::2] = 1
    return BinarySeries(bits)


def _few_runs(k: int, total: int, seed: int) -> RleSeries:
    if total < k:
        raise ValueError(f"few_runs needs size >= run count (got size {total}, runs {k})")
    if k == 1:
        lengths = np.array([total], dtype=np.int64)
    else:
        # jittered cut points: c_i = floor(total*i/k) + jitter_i with
        # jitter < floor(total/k), strictly increasing, so all run lengths
        # stay >= 1 and sum exactly to the total
        avg = total // k
        base_q, base_r = divmod(total, k)
        i = np.arange(1, k, dtype=np.int64)
        cuts = base_q * i + (base_r * i) // k
        if avg > 1:
            jitter = (mix_words(seed, k - 1) % np.uint64(avg)).astype(np.int64)
            cuts = cuts + jitter
        bounds = np.empty(k + 1, dtype=np.int64)
        bounds[0] = 0
        bounds[1:-1] = cuts
        bounds[-1] = total
        lengths = np.diff(bounds)
    first = splitmix64(derive_seed(seed, 0x5EED)) & 1
    return RleSeries._trusted(int(first), lengths, total)


def generate(spec: GeneratorSpec, size: int, seed: int) -> Union[BinarySeries, RleSeries]:
    """One series of the given decoded length."""
    if size < 1:
        raise ValueError("size must be >= 1")
    if spec.name == "uniform":
        return _bits_threshold(size, seed, 0.5)
    if spec.name == "biased":
        return _bits_threshold(size, seed, spec.param)
    if spec.name == "alternating":
        return _alternating(size)
    return _few_runs(spec.param, size, seed)


def generate_pair(
    spec: GeneratorSpec, size: int, seed: int, trial: int
) -> tuple[Union[BinarySeries, RleSeries], Union[BinarySeries, RleSeries]]:
    """Two independent series for one benchmark trial."""
    sx = derive_seed(seed, size, trial, 0)
    sy = derive_seed(seed, size, trial, 1)
    return generate(spec, size, sx), generate(spec, size, sy)
