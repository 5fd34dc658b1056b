import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bindtw.series import (
    DEFAULT_DECODE_CAP,
    BinarySeries,
    DecodeTooLarge,
    ParseError,
    RleSeries,
    SeriesError,
    format_bits,
    format_rle,
    parse_bits_line,
    parse_rle_line,
    parse_series_text,
    random_expansion,
    rle_decode,
    rle_encode,
)

bitstrings = st.text(alphabet="01", min_size=1, max_size=200)


class TestBinarySeries:
    def test_from_string(self):
        x = BinarySeries("0011101")
        assert x.n == 7
        assert x.to01() == "0011101"
        assert list(x.to_numpy()) == [0, 0, 1, 1, 1, 0, 1]

    def test_rejects_empty(self):
        with pytest.raises(SeriesError):
            BinarySeries("")

    @pytest.mark.parametrize("bad", ["01a0", "2", "0 1", "01\n"])
    def test_rejects_alphabet_violations(self, bad):
        with pytest.raises(SeriesError):
            BinarySeries(bad)

    def test_accepts_bytes_and_arrays(self):
        assert BinarySeries(b"\x00\x01") == BinarySeries("01")
        assert BinarySeries(np.array([1, 0], dtype=np.uint8)) == BinarySeries("10")


class TestRleRoundTrip:
    def test_encode_examples(self):
        assert rle_encode(BinarySeries("0011101")).runs == ((0, 2), (1, 3), (0, 1), (1, 1))
        assert rle_encode(BinarySeries("0")).runs == ((0, 1),)
        assert rle_encode(BinarySeries("010101")).runs == (
            (0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1),
        )

    def test_decode_examples(self):
        assert rle_decode(RleSeries([(0, 2), (1, 3)])).to01() == "00111"
        assert rle_decode(RleSeries([(1, 1)])).to01() == "1"

    def test_decode_cap(self):
        big = RleSeries([(0, 1 << 40)])
        with pytest.raises(DecodeTooLarge):
            rle_decode(big)
        assert big.total_length == 1 << 40

    def test_rejects_non_alternating(self):
        with pytest.raises(SeriesError):
            RleSeries([(0, 2), (0, 3)])

    def test_rejects_zero_length_run(self):
        with pytest.raises(SeriesError):
            RleSeries([(0, 0)])

    def test_total_accounting(self):
        r = RleSeries([(1, 5), (0, 2), (1, 1)])
        assert r.total_length == 8
        assert r.first_symbol == 1
        assert r.last_symbol == 1
        assert r.run_count == 3

    @given(bitstrings)
    @settings(max_examples=300)
    def test_round_trip(self, s):
        x = BinarySeries(s)
        assert rle_decode(rle_encode(x)) == x

    @given(bitstrings)
    @settings(max_examples=300)
    def test_alternation(self, s):
        runs = rle_encode(BinarySeries(s)).runs
        assert all(a[0] != b[0] for a, b in zip(runs, runs[1:]))
        assert all(length >= 1 for _, length in runs)

    def test_encode_of_decode_is_identity(self):
        r = RleSeries([(0, 4), (1, 2), (0, 7)])
        assert rle_encode(rle_decode(r)) == r


class TestRandomExpansion:
    def test_zero_budget_identity(self):
        x = BinarySeries("01")
        assert random_expansion(x, 0, 123) is x

    def test_single_run_forced(self):
        assert random_expansion(BinarySeries("0"), 3, 99).to01() == "0000"

    def test_budget_two_outcomes(self):
        out = random_expansion(BinarySeries("01"), 2, 7).to01()
        assert out in {"0001", "0011", "0111"}
        again = random_expansion(BinarySeries("01"), 2, 7).to01()
        assert again == out

    @given(bitstrings, st.integers(0, 50), st.integers(0, 2**63 - 1))
    @settings(max_examples=200)
    def test_preserves_symbol_sequence_and_length(self, s, budget, seed):
        x = BinarySeries(s)
        grown = random_expansion(x, budget, seed)
        assert grown.n == x.n + budget
        a, b = rle_encode(x), rle_encode(grown)
        assert a.first_symbol == b.first_symbol
        assert a.run_count == b.run_count
        assert np.all(b.lengths >= a.lengths)


class TestTextFormats:
    def test_parse_bits(self):
        assert parse_bits_line("0101").to01() == "0101"

    def test_parse_bits_error_column(self):
        with pytest.raises(ParseError) as err:
            parse_bits_line("01x1", lineno=3)
        assert err.value.line == 3
        assert err.value.column == 3

    def test_parse_rle(self):
        r = parse_rle_line("2*0 3*1 1*0")
        assert r.runs == ((0, 2), (1, 3), (0, 1))

    def test_parse_rle_rejects_equal_adjacent(self):
        with pytest.raises(ParseError) as err:
            parse_rle_line("2*0 3*0")
        assert err.value.column == 5

    @pytest.mark.parametrize("bad", ["", "0", "2*2", "x*0", "0*1", "1*0  1*1", "3*1 "])
    def test_parse_rle_rejects_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_rle_line(bad)

    def test_parse_text_multiline_and_crlf(self):
        out = parse_series_text("01\r\n10\n", "bits")
        assert [s.to01() for s in out] == ["01", "10"]

    def test_format_round_trip(self):
        x = BinarySeries("0011101")
        assert parse_bits_line(format_bits(x)) == x
        r = rle_encode(x)
        assert parse_rle_line(format_rle(r)) == r
