"""Exact Hankel determinants of rational sequences."""
from __future__ import annotations

import math

from .poly import Rat, as_rat, bareiss_det_int


def hankel_det(s, k: int) -> Rat:
    """det(s[i+j]) for i,j = 0..k, by fraction-free elimination.

    Needs at least 2k+1 entries of the sequence.
    """
    if k < 0:
        raise ValueError("order must be nonnegative")
    s = [as_rat(x) for x in s]
    if len(s) < 2 * k + 1:
        raise ValueError(f"need at least {2 * k + 1} sequence entries, got {len(s)}")
    if k == 0:
        return s[0]
    den = math.lcm(*[x.denominator for x in s[: 2 * k + 1]])
    ints = [x.numerator * (den // x.denominator) for x in s[: 2 * k + 1]]
    m = [[ints[i + j] for j in range(k + 1)] for i in range(k + 1)]
    return Rat(bareiss_det_int(m), den ** (k + 1))
