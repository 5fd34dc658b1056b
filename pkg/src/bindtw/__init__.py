"""Exact dynamic time warping for binary series.

Distance engine with two fast paths (linear in the raw length; near-linear
in the number of runs for RLE inputs), brute-force oracles for validation,
deterministic benchmark generators, an HTTP service, and a CLI client.
"""

from .api import DtwResult, dtw, dtw_linear, dtw_rle
from .matching import (
    Exhausted,
    Infeasible,
    KeyBoundExceeded,
    MatchingState,
    SubseqInstance,
    delta_trace,
    solve_bucket,
    solve_tree,
)
from .oracle import TooLarge, dtw_dp, matching_enum, subseq_dp
from .reduction import ReductionOutput, dtw_zero_test, reduce_pair
from .series import (
    BinarySeries,
    DecodeTooLarge,
    ParseError,
    RleSeries,
    SeriesError,
    random_expansion,
    rle_decode,
    rle_encode,
)

__version__ = "0.1.0"

__all__ = [
    "BinarySeries",
    "RleSeries",
    "SeriesError",
    "DecodeTooLarge",
    "ParseError",
    "rle_encode",
    "rle_decode",
    "random_expansion",
    "SubseqInstance",
    "MatchingState",
    "Infeasible",
    "Exhausted",
    "KeyBoundExceeded",
    "solve_tree",
    "solve_bucket",
    "delta_trace",
    "ReductionOutput",
    "reduce_pair",
    "dtw_zero_test",
    "TooLarge",
    "dtw_dp",
    "subseq_dp",
    "matching_enum",
    "DtwResult",
    "dtw",
    "dtw_linear",
    "dtw_rle",
    "__version__",
]
