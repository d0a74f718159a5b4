"""Subblock- and sliding-window-constrained coding toolkit.

Thin wrappers over the C++ core. Counts come back as exact Python ints.
"""

from swcodes import _core
from swcodes._core import (
    DecodeError,
    ParamError,
    check_membership,
    decode,
    encode,
    enumerate_class,
    payload_len,
    verify_bounds,
    vt_correct,
    vt_syndrome,
)


def count_secc(n: int, ell: int, a: int, b: int) -> int:
    """|S(n, ell, [a, b])|: every subblock weight within [a, b]."""
    return int(_core.count_secc(n, ell, a, b))


def count_swcc(n: int, ell: int, a: int, b: int, state_cap: int = 1 << 21) -> int:
    """|W(n, ell, [a, b])|: every sliding-window weight within [a, b]."""
    return int(_core.count_swcc(n, ell, a, b, state_cap))


__all__ = [
    "DecodeError",
    "ParamError",
    "check_membership",
    "count_secc",
    "count_swcc",
    "decode",
    "encode",
    "enumerate_class",
    "payload_len",
    "verify_bounds",
    "vt_correct",
    "vt_syndrome",
]
