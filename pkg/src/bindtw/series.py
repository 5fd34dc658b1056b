"""Binary time series in raw and run-length-encoded form.

Two value types: :class:`BinarySeries` stores one byte per symbol and is
bounded by memory; :class:`RleSeries` stores 64-bit run lengths and can
describe strings far longer than memory.  Both are immutable after
construction and safe to share across threads.

The module also owns the two text formats used by the CLI and the service:

* ``bits``  -- one series per line, ASCII ``0``/``1`` only.
* ``rle``   -- one series per line, tokens ``<count>*<symbol>`` separated by
  single spaces; adjacent tokens with equal symbols are rejected as
  non-canonical.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from ._mix import mix_words

__all__ = [
    "BinarySeries",
    "RleSeries",
    "SeriesError",
    "DecodeTooLarge",
    "ParseError",
    "DEFAULT_DECODE_CAP",
    "MAX_TOTAL_LENGTH",
    "rle_encode",
    "rle_decode",
    "random_expansion",
    "parse_bits_line",
    "parse_rle_line",
    "parse_series_text",
    "format_bits",
    "format_rle",
]

#: Largest raw string the package will materialize by default (symbols).
DEFAULT_DECODE_CAP = 1 << 28

#: Largest total decoded length an RleSeries may describe.
MAX_TOTAL_LENGTH = (1 << 63) - 1

# str/bytes of ASCII digits -> one byte per symbol with values 0/1
_ASCII_TO_BIT = bytes.maketrans(b"01", b"\x00\x01")
_BIT_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")


class SeriesError(ValueError):
    """Invalid series construction or conversion."""


class DecodeTooLarge(SeriesError):
    """Materializing an RLE series would exceed the decode cap."""


class ParseError(SeriesError):
    """Malformed series text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


def _validate_bits(data: bytes) -> None:
    if not data:
        raise SeriesError("series must contain at least one symbol")
    stripped = data.translate(None, b"\x00\x01")
    if stripped:
        arr = np.frombuffer(data, dtype=np.uint8)
        pos = int(np.argmax(arr > 1))
        raise SeriesError(f"invalid symbol {data[pos]!r} at index {pos}")


class BinarySeries:
    """A nonempty string over the alphabet {0, 1}, one byte per symbol."""

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[str, bytes, bytearray, Sequence[int], np.ndarray]):
        if isinstance(bits, str):
            try:
                data = bits.encode("ascii")
            except UnicodeEncodeError as exc:
                raise SeriesError(f"invalid symbol at index {exc.start}") from None
            data = data.translate(_ASCII_TO_BIT)
        elif isinstance(bits, (bytes, bytearray)):
            data = bytes(bits)
        elif isinstance(bits, np.ndarray):
            data = np.ascontiguousarray(bits, dtype=np.uint8).tobytes()
        else:
            data = bytes(bits)
        _validate_bits(data)
        self._bits = data

    @classmethod
    def _from_valid_bytes(cls, data: bytes) -> "BinarySeries":
        obj = object.__new__(cls)
        obj._bits = data
        return obj

    @property
    def bits(self) -> bytes:
        """Symbol values 0/1, one byte each."""
        return self._bits

    @property
    def n(self) -> int:
        return len(self._bits)

    def to_numpy(self) -> np.ndarray:
        """Zero-copy uint8 view of the symbols."""
        return np.frombuffer(self._bits, dtype=np.uint8)

    def to01(self) -> str:
        return self._bits.translate(_BIT_TO_ASCII).decode("ascii")

    def __len__(self) -> int:
        return len(self._bits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BinarySeries) and self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        text = self.to01()
        if len(text) > 40:
            text = f"{text[:37]}...[n={self.n}]"
        return f"BinarySeries({text!r})"


class RleSeries:
    """Maximal runs of a binary string: alternating symbols, 64-bit lengths.

    Internally stores the first run's symbol plus the length sequence; the
    alternation invariant makes the full symbol sequence redundant.
    """

    __slots__ = ("_first", "_lengths", "_total")

    def __init__(self, runs: Iterable[tuple[int, int]]):
        pairs = list(runs)
        if not pairs:
            raise SeriesError("RLE series must contain at least one run")
        prev = -1
        for idx, (sym, length) in enumerate(pairs):
            if sym not in (0, 1):
                raise SeriesError(f"run {idx}: symbol must be 0 or 1, got {sym!r}")
            if not (1 <= length <= MAX_TOTAL_LENGTH):
                raise SeriesError(f"run {idx}: length must be in [1, 2**63-1], got {length}")
            if sym == prev:
                raise SeriesError(f"run {idx}: adjacent runs must alternate symbols")
            prev = sym
        lengths = np.array([length for _, length in pairs], dtype=np.int64)
        total = sum(int(v) for v in lengths) if len(pairs) < 1024 else _careful_sum(lengths)
        if total > MAX_TOTAL_LENGTH:
            raise SeriesError("total decoded length exceeds 2**63-1")
        self._first = int(pairs[0][0])
        lengths.flags.writeable = False
        self._lengths = lengths
        self._total = total

    @classmethod
    def _trusted(cls, first: int, lengths: np.ndarray, total: int) -> "RleSeries":
        obj = object.__new__(cls)
        obj._first = first
        if lengths.flags.writeable:
            lengths.flags.writeable = False
        obj._lengths = lengths
        obj._total = total
        return obj

    @property
    def first_symbol(self) -> int:
        return self._first

    @property
    def last_symbol(self) -> int:
        return self._first ^ ((len(self._lengths) - 1) & 1)

    @property
    def run_count(self) -> int:
        return len(self._lengths)

    @property
    def lengths(self) -> np.ndarray:
        """Run lengths as a read-only int64 array."""
        return self._lengths

    @property
    def total_length(self) -> int:
        return self._total

    def symbol_at_run(self, index: int) -> int:
        """Symbol of the index-th run (0-based)."""
        return self._first ^ (index & 1)

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        """Materialized (symbol, length) pairs; costs O(run_count)."""
        return tuple(
            (self._first ^ (i & 1), int(length)) for i, length in enumerate(self._lengths)
        )

    def __len__(self) -> int:
        return len(self._lengths)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RleSeries)
            and self._first == other._first
            and np.array_equal(self._lengths, other._lengths)
        )

    def __hash__(self) -> int:
        return hash((self._first, self._lengths.tobytes()))

    def __repr__(self) -> str:
        if self.run_count <= 8:
            body = " ".join(f"{int(l)}*{self._first ^ (i & 1)}" for i, l in enumerate(self._lengths))
        else:
            body = f"{self.run_count} runs, total {self._total}"
        return f"RleSeries({body})"


def _careful_sum(lengths: np.ndarray) -> int:
    # int64 cumulative sums may wrap near 2**63; fall back to exact python
    # arithmetic when the float estimate says we are anywhere near the edge.
    estimate = float(lengths.sum(dtype=np.float64))
    if estimate < 4.0e18:
        return int(lengths.sum(dtype=np.int64))
    return sum(int(v) for v in lengths)


def rle_encode(x: BinarySeries) -> RleSeries:
    """Encode a raw series into its maximal runs."""
    a = x.to_numpy()
    n = len(a)
    ends = np.flatnonzero(a[1:] != a[:-1])
    bounds = np.empty(len(ends) + 2, dtype=np.int64)
    bounds[0] = -1
    bounds[1:-1] = ends
    bounds[-1] = n - 1
    lengths = np.diff(bounds)
    return RleSeries._trusted(int(a[0]), lengths, n)


def rle_decode(x: RleSeries, cap: int = DEFAULT_DECODE_CAP) -> BinarySeries:
    """Materialize an RLE series; refuses totals above the cap."""
    if x.total_length > cap:
        raise DecodeTooLarge(
            f"decoded length {x.total_length} exceeds materialization cap {cap}"
        )
    k = x.run_count
    symbols = np.empty(k, dtype=np.uint8)
    symbols[0::2] = x.first_symbol
    symbols[1::2] = 1 - x.first_symbol
    bits = np.repeat(symbols, x.lengths).tobytes()
    return BinarySeries._from_valid_bytes(bits)


def random_expansion(x: BinarySeries, budget: int, seed: int) -> BinarySeries:
    """Extend x's runs by `budget` extra symbols total, deterministically.

    Each extra symbol is assigned to a run chosen by a seeded splitmix64
    stream, so the output is a uniform-ish expansion of length n + budget
    and identical for identical (x, budget, seed).
    """
    if budget < 0:
        raise SeriesError("expansion budget must be >= 0")
    if budget == 0:
        return x
    rle = rle_encode(x)
    k = rle.run_count
    extra = np.zeros(k, dtype=np.int64)
    picks = (mix_words(seed, budget) % np.uint64(k)).astype(np.int64)
    np.add.at(extra, picks, 1)
    grown = RleSeries._trusted(rle.first_symbol, rle.lengths + extra, rle.total_length + budget)
    return rle_decode(grown)


# --- text formats ---------------------------------------------------------


def parse_bits_line(line: str, lineno: int = 1) -> BinarySeries:
    data = line.encode("ascii", errors="replace")
    arr = np.frombuffer(data, dtype=np.uint8)
    bad = (arr != 0x30) & (arr != 0x31)
    if bad.any():
        col = int(np.argmax(bad)) + 1
        raise ParseError(f"invalid character {line[col - 1]!r}", lineno, col)
    if len(data) == 0:
        raise ParseError("empty series", lineno, 1)
    return BinarySeries._from_valid_bytes(data.translate(_ASCII_TO_BIT))


def parse_rle_line(line: str, lineno: int = 1) -> RleSeries:
    runs: list[tuple[int, int]] = []
    first = -1
    prev_sym = -1
    total = 0
    lengths: list[int] = []
    col = 1
    for token in line.split(" "):
        if not token:
            raise ParseError("empty token (double space?)", lineno, col)
        count_text, sep, sym_text = token.partition("*")
        if not sep or sym_text not in ("0", "1"):
            raise ParseError(f"expected <count>*<symbol>, got {token!r}", lineno, col)
        if not count_text.isdigit():
            raise ParseError(f"invalid run length {count_text!r}", lineno, col)
        count = int(count_text)
        if not (1 <= count <= MAX_TOTAL_LENGTH):
            raise ParseError(f"run length {count} out of range [1, 2**63-1]", lineno, col)
        sym = int(sym_text)
        if sym == prev_sym:
            raise ParseError("adjacent runs with equal symbols (non-canonical RLE)", lineno, col)
        if first < 0:
            first = sym
        prev_sym = sym
        total += count
        lengths.append(count)
        col += len(token) + 1
    if not lengths:
        raise ParseError("empty series", lineno, 1)
    if total > MAX_TOTAL_LENGTH:
        raise ParseError("total decoded length exceeds 2**63-1", lineno, 1)
    arr = np.array(lengths, dtype=np.int64)
    return RleSeries._trusted(first, arr, total)


def parse_series_text(text: str, fmt: str) -> list[Union[BinarySeries, RleSeries]]:
    """Parse a whole document: one series per line, blank lines rejected."""
    if fmt not in ("bits", "rle"):
        raise ValueError(f"unknown format {fmt!r}")
    out: list[Union[BinarySeries, RleSeries]] = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for i, raw in enumerate(lines, start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        if fmt == "bits":
            out.append(parse_bits_line(line, i))
        else:
            out.append(parse_rle_line(line, i))
    if not out:
        raise ParseError("no series in input", 1, 1)
    return out


def format_bits(x: BinarySeries) -> str:
    return x.to01()


def format_rle(x: RleSeries) -> str:
    return " ".join(
        f"{int(length)}*{x.first_symbol ^ (i & 1)}" for i, length in enumerate(x.lengths)
    )
