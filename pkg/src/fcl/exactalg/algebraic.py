"""Exact real algebraic numbers as (squarefree polynomial, isolating interval).

Isolation is Sturm bisection inside a Cauchy bound.  Rational roots are
recognized exactly (the interval collapses to a point) by scanning the
divisors of the leading integer coefficient: any rational root of a
primitive integer polynomial has denominator dividing the leading
coefficient, so once an isolating interval is narrower than 1/(2q) it holds
at most one candidate with denominator q.

Refinement is pure: methods return new numbers with narrower intervals,
the original is never mutated.
"""
from __future__ import annotations

from fractions import Fraction

from .intervals import Iv, iv_poly_eval
from .poly import Poly, Rat, as_rat, poly_gcd, squarefree_part
from .sturm import cauchy_bound, count_distinct_real_roots, sturm_chain, _variations_at


class AlgebraicReal:
    """A real algebraic number: one root of `defining` inside [lo, hi]."""

    __slots__ = ("defining", "lo", "hi")

    def __init__(self, defining: Poly, lo, hi, _checked=False):
        lo, hi = as_rat(lo), as_rat(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        if not _checked:
            if lo == hi:
                if defining(lo) != 0:
                    raise ValueError("point interval is not a root")
            else:
                if count_distinct_real_roots(defining, lo, hi) != 1 or defining(lo) == 0:
                    raise ValueError("interval does not isolate exactly one root")
        self.defining = defining
        self.lo, self.hi = lo, hi

    @staticmethod
    def from_rational(q) -> "AlgebraicReal":
        q = as_rat(q)
        return AlgebraicReal(Poly([-q, 1]), q, q, _checked=True)

    # -- queries -------------------------------------------------------

    def is_rational(self) -> bool:
        return self.lo == self.hi

    def as_fraction(self):
        """The exact value when rational, else None."""
        return self.lo if self.lo == self.hi else None

    @property
    def interval(self) -> Iv:
        return Iv(self.lo, self.hi)

    def width(self) -> Rat:
        return self.hi - self.lo

    def __float__(self) -> float:
        a = self.refined_to(Fraction(1, 10**18))
        return float((a.lo + a.hi) / 2)

    def __repr__(self):
        if self.is_rational():
            return f"AlgebraicReal({self.lo})"
        return f"AlgebraicReal({self.defining.to_str('x')} in [{self.lo}, {self.hi}] ~ {float(self):.6g})"

    # -- refinement ------------------------------------------------------

    def _bisect_once(self) -> "AlgebraicReal":
        if self.is_rational():
            return self
        mid = (self.lo + self.hi) / 2
        v = self.defining(mid)
        if v == 0:
            return AlgebraicReal(self.defining, mid, mid, _checked=True)
        # keep the half with the sign change
        if self.defining(self.lo) * v < 0:
            return AlgebraicReal(self.defining, self.lo, mid, _checked=True)
        return AlgebraicReal(self.defining, mid, self.hi, _checked=True)

    def refined_to(self, width) -> "AlgebraicReal":
        width = as_rat(width)
        a = self
        while a.width() > width:
            a = a._bisect_once()
        return a

    # -- exact predicates --------------------------------------------------

    def equals_rational(self, q) -> bool:
        q = as_rat(q)
        return self.lo <= q <= self.hi and self.defining(q) == 0

    def is_root_of(self, p: Poly) -> bool:
        """Exact test whether p vanishes at this number."""
        if p.is_zero():
            return True
        if self.is_rational():
            return p(self.lo) == 0
        g = poly_gcd(self.defining, p)
        if g.is_constant():
            return False
        # all roots of g are roots of defining; the only root of defining in
        # our interval is this number, so g has a root here iff it is ours
        return count_distinct_real_roots(g, self.lo, self.hi) == 1

    def sign_of(self, p: Poly) -> int:
        """Exact sign of p at this number."""
        if self.is_rational():
            v = p(self.lo)
            return (v > 0) - (v < 0)
        if self.is_root_of(p):
            return 0
        a = self
        while True:
            s = iv_poly_eval(p.coeffs, Iv(a.lo, a.hi)).sign()
            if s is not None:
                return s
            a = a._bisect_once()

    def compare_rational(self, q) -> int:
        q = as_rat(q)
        if self.equals_rational(q):
            return 0
        a = self
        while a.lo <= q <= a.hi:
            a = a._bisect_once()
        return -1 if a.hi < q else 1

    def __lt__(self, other):
        if isinstance(other, AlgebraicReal):
            return _compare(self, other) < 0
        return self.compare_rational(other) < 0

    def __le__(self, other):
        if isinstance(other, AlgebraicReal):
            return _compare(self, other) <= 0
        return self.compare_rational(other) <= 0

    def __gt__(self, other):
        if isinstance(other, AlgebraicReal):
            return _compare(self, other) > 0
        return self.compare_rational(other) > 0

    def __ge__(self, other):
        if isinstance(other, AlgebraicReal):
            return _compare(self, other) >= 0
        return self.compare_rational(other) >= 0

    def __eq__(self, other):
        if isinstance(other, AlgebraicReal):
            return _compare(self, other) == 0
        if isinstance(other, (int, Fraction)):
            return self.equals_rational(other)
        return NotImplemented

    def __hash__(self):
        raise TypeError("AlgebraicReal is unhashable (use as_fraction for rationals)")


def _compare(a: AlgebraicReal, b: AlgebraicReal) -> int:
    if b.is_rational():
        return a.compare_rational(b.lo)
    if a.is_rational():
        return -b.compare_rational(a.lo)
    # Equality: each isolating interval contains exactly one root of the
    # respective defining polynomial, hence at most one root of
    # g = gcd(defining_a, defining_b), and when a (resp. b) is a root of g
    # that g-root *is* a (resp. b).  So a == b iff the intersection of the
    # intervals contains a root of g.
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo <= hi:
        g = poly_gcd(a.defining, b.defining)
        if not g.is_constant() and a.is_root_of(g) and b.is_root_of(g):
            if g(lo) == 0 or (lo < hi and count_distinct_real_roots(g, lo, hi) >= 1):
                return 0
    while True:
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        a, b = a._bisect_once(), b._bisect_once()


# -- root isolation ----------------------------------------------------------


def _divisors(n: int, cap: int = 10**12):
    """Divisors of |n|; for huge n only the trivial divisor is reported.

    Incomplete lists merely leave some rational roots unrationalized
    (they stay as isolating intervals), never affecting correctness.
    """
    n = abs(n)
    if n == 0 or n > cap:
        return [1]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _try_rationalize(p: Poly, lo: Rat, hi: Rat, lead_divisors):
    """Exact rational root inside (lo, hi), or None.

    Any rational root of the primitive integer form of p has denominator
    dividing the leading coefficient.
    """
    for q in lead_divisors:
        # shrink until at most one multiple of 1/q lies inside
        while hi - lo >= Fraction(1, 2 * q):
            mid = (lo + hi) / 2
            v = p(mid)
            if v == 0:
                return mid
            if p(lo) * v < 0:
                hi = mid
            else:
                lo = mid
        k0 = (lo * q).__ceil__()
        cand = Fraction(k0, q)
        if lo < cand < hi and p(cand) == 0:
            return cand
    return None


def isolate_real_roots(p: Poly, rationalize: bool = True):
    """Isolating AlgebraicReals for the distinct real roots of p, ascending.

    With `rationalize`, rational roots come back with collapsed (point)
    intervals when the leading coefficient is small enough to factor.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    s = squarefree_part(p)
    if s.is_constant():
        return []
    chain = sturm_chain(s)
    bound = cauchy_bound(s)
    ints, _ = s.int_coeffs()
    lead_divisors = _divisors(ints[-1]) if (rationalize and ints) else []

    out = []

    def var(x):
        return _variations_at(chain, x)

    def split(lo, hi, vlo, vhi):
        # invariant: s(lo) != 0, s(hi) != 0; count in (lo, hi] = vlo - vhi
        n = vlo - vhi
        if n == 0:
            return
        if n == 1:
            r = _try_rationalize(s, lo, hi, lead_divisors) if lead_divisors else None
            if r is not None:
                out.append(AlgebraicReal(s, r, r, _checked=True))
            else:
                out.append(AlgebraicReal(s, lo, hi, _checked=True))
            return
        mid = (lo + hi) / 2
        if s(mid) == 0:
            # shrink the nudge until the two gaps around mid are root-free:
            # (mid-eps, mid] must hold exactly the root mid, (mid, mid+eps] none
            eps = (hi - lo) / 4
            while True:
                if s(mid - eps) != 0 and s(mid + eps) != 0:
                    vml, vm, vmr = var(mid - eps), var(mid), var(mid + eps)
                    if vml - vm == 1 and vm == vmr:
                        break
                eps /= 2
            split(lo, mid - eps, vlo, vml)
            out.append(AlgebraicReal(s, mid, mid, _checked=True))
            split(mid + eps, hi, vmr, vhi)
            return
        vm = var(mid)
        split(lo, mid, vlo, vm)
        split(mid, hi, vm, vhi)

    split(-bound, bound, var(-bound), var(bound))
    return out
