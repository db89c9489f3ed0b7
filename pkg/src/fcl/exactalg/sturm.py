"""Sturm chains and exact real-root counting.

Counts follow the (lo, hi] convention: with V(x) the number of sign changes
in the chain at x (zeros skipped, signs at +/-infinity taken from leading
coefficients), V(lo) - V(hi) is the number of distinct real roots in
(lo, hi].  Chains terminate at gcd(p, p'), so multiple roots are counted
once; the public `sturm_count` nevertheless insists on squarefree input,
as callers are expected to have separated multiplicity questions already.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import NotSquarefree
from .poly import Poly, Rat, is_squarefree, squarefree_part

NEG_INF = object()
POS_INF = object()


def _is_inf(x) -> bool:
    return x is NEG_INF or x is POS_INF or (isinstance(x, float) and x in (float("inf"), float("-inf")))


def _norm_endpoint(x):
    if x is None:
        raise ValueError("endpoint may not be None")
    if isinstance(x, float):
        if x == float("inf"):
            return POS_INF
        if x == float("-inf"):
            return NEG_INF
        return Fraction(x)
    if x is NEG_INF or x is POS_INF:
        return x
    return Rat(x)


def sturm_chain(p: Poly):
    """Sturm chain p, p', -rem(...), terminating at (a multiple of) gcd(p, p')."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_at(p: Poly, x) -> int:
    if x is POS_INF:
        v = p.lc
    elif x is NEG_INF:
        v = p.lc * (-1) ** p.degree if not p.is_zero() else Rat(0)
    else:
        v = p(x)
    return (v > 0) - (v < 0)


def sign_variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _variations_at(chain, x) -> int:
    return sign_variations([_sign_at(p, x) for p in chain])


def count_distinct_real_roots(p: Poly, lo=NEG_INF, hi=POS_INF) -> int:
    """Distinct real roots of any nonzero p in (lo, hi] (no squarefree demand)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.is_constant():
        return 0
    lo, hi = _norm_endpoint(lo), _norm_endpoint(hi)
    chain = sturm_chain(p)
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def sturm_count(p: Poly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of real roots of a squarefree p in (lo, hi]; +/-inf endpoints allowed."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if not is_squarefree(p):
        raise NotSquarefree("sturm_count requires a squarefree polynomial")
    lo, hi = _norm_endpoint(lo), _norm_endpoint(hi)
    if not _is_inf(lo) and not _is_inf(hi) and lo >= hi:
        raise ValueError("need lo < hi")
    return count_distinct_real_roots(p, lo, hi)


def is_real_rooted(p: Poly) -> bool:
    """True iff every complex root of p is real (constants vacuously qualify)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    s = squarefree_part(p)
    if s.is_constant():
        return True
    return count_distinct_real_roots(s) == s.degree


def cauchy_bound(p: Poly) -> Rat:
    """B with every real root of p in (-B, B)."""
    if p.is_zero() or p.is_constant():
        return Rat(1)
    lc = abs(p.lc)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lc
