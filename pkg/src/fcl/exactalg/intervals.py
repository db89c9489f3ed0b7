"""Rational interval arithmetic for certified sign decisions.

Endpoints are exact Fractions, so enclosures never suffer rounding; width
only grows through genuine interval dependence.
"""
from __future__ import annotations

from .poly import Rat, as_rat


class Iv:
    """Closed interval [lo, hi] with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = as_rat(lo)
        hi = lo if hi is None else as_rat(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo, self.hi = lo, hi

    @staticmethod
    def point(x) -> "Iv":
        return Iv(x)

    @property
    def width(self) -> Rat:
        return self.hi - self.lo

    @property
    def mid(self) -> Rat:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = as_rat(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self):
        """1, -1, 0 (exact point zero) or None when the sign is undetermined."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __add__(self, other) -> "Iv":
        other = _coerce(other)
        return Iv(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "Iv":
        return Iv(-self.hi, -self.lo)

    def __sub__(self, other) -> "Iv":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Iv":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Iv":
        other = _coerce(other)
        vals = [self.lo * other.lo, self.lo * other.hi,
                self.hi * other.lo, self.hi * other.hi]
        return Iv(min(vals), max(vals))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Iv":
        other = _coerce(other)
        if other.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        vals = [self.lo / other.lo, self.lo / other.hi,
                self.hi / other.lo, self.hi / other.hi]
        return Iv(min(vals), max(vals))

    def __rtruediv__(self, other) -> "Iv":
        return _coerce(other) / self

    def __pow__(self, n: int) -> "Iv":
        if n < 0:
            raise ValueError("negative interval power")
        out = Iv(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"Iv({self.lo}, {self.hi})"


def _coerce(x) -> Iv:
    if isinstance(x, Iv):
        return x
    return Iv(as_rat(x))


def iv_poly_eval(coeffs, x: Iv) -> Iv:
    """Horner evaluation of a polynomial with Iv (or rational) coefficients."""
    acc = Iv(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + _coerce(c)
    return acc
