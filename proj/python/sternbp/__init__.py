"""Digit-restricted binary partition counts and the Stern diatomic sequence.

The heavy lifting lives in the compiled ``_core`` extension; see its
docstrings. All integer arguments and results are plain python ints of any
size.
"""

from ._core import (
    CheckReport,
    __version__,
    a174868_prefix,
    b,
    bfile_text,
    bprime,
    check_halving,
    check_main_identity,
    compare_bfile_text,
    cross_engines,
    digit_count,
    eval_seq,
    gf_counts,
    hatb,
    prefix,
    replay_proof,
    sigma,
    sigma_triple,
    stern,
    stern_pair,
)

__all__ = [
    "CheckReport",
    "__version__",
    "a174868_prefix",
    "b",
    "bfile_text",
    "bprime",
    "check_halving",
    "check_main_identity",
    "compare_bfile_text",
    "cross_engines",
    "digit_count",
    "eval_seq",
    "gf_counts",
    "hatb",
    "prefix",
    "replay_proof",
    "sigma",
    "sigma_triple",
    "stern",
    "stern_pair",
]
