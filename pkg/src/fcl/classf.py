"""The class of rational functions F(w) = w*P(w)/Q(w) and its operation algebra.

Members are normalized pairs (P, Q) with P(0) = Q(0) = 1 and gcd(P, Q)
constant.  The R-transform R = w/F - 1 = (Q - P)/P linearizes free
convolution; composition of F-functions realizes monotone convolution.

Moments are extracted by two independent routes (Newton series inversion
of F, and the cumulant-to-moment convolution recursion) which must agree
exactly; a mismatch raises, it is never papered over.
"""
from __future__ import annotations

from dataclasses import dataclass
from .errors import ComputationError, InvalidRTransform, NotInClass
from .exactalg import Poly, Rat, as_rat, poly_gcd
from .series import invert_f_series, ser_div, ser_trunc


@dataclass(frozen=True)
class ClassF:
    """Normalized representation of F(w) = w*P(w)/Q(w)."""

    P: Poly
    Q: Poly

    def __repr__(self):
        num = f"w*({self.P.to_str()})" if self.P != Poly.one() else "w"
        if self.Q == Poly.one():
            return f"ClassF({num})"
        return f"ClassF({num}/({self.Q.to_str()}))"

    def eval(self, w):
        """Numeric evaluation (float/complex welcome)."""
        return w * self.P(w) / self.Q(w)


@dataclass(frozen=True)
class RatFun:
    """Reduced rational function num/den with den(0) != 0."""

    num: Poly
    den: Poly

    def __repr__(self):
        if self.den == Poly.one():
            return f"RatFun({self.num.to_str()})"
        return f"RatFun(({self.num.to_str()})/({self.den.to_str()}))"

    def eval(self, w):
        return self.num(w) / self.den(w)

    def __add__(self, other: "RatFun") -> "RatFun":
        return make_ratfun(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return make_ratfun(self.num * other.den - other.num * self.den,
                           self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den


@dataclass(frozen=True)
class SeriesPrefix:
    """A prefix of a rational sequence: terms[n] is the n-th element."""

    terms: tuple
    kind: str = "generic"  # moments | cumulants | generic

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(as_rat(t) for t in self.terms))
        if self.kind == "moments" and self.terms and self.terms[0] != 1:
            raise ValueError("moment prefix must start with 1")
        if self.kind == "cumulants" and self.terms and self.terms[0] != 0:
            raise ValueError("cumulant prefix must start with 0")

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


def make_ratfun(num: Poly, den: Poly) -> RatFun:
    """Reduce num/den; den may not vanish at 0 (or be zero)."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return RatFun(Poly.zero(), Poly.one())
    g = poly_gcd(num, den)
    if not g.is_constant():
        num, den = num.exact_div(g), den.exact_div(g)
    if den(0) == 0:
        raise ValueError("denominator vanishes at 0")
    c = 1 / den.coeffs[0]
    return RatFun(num * c, den * c)


def make_classf(p_in: Poly, q_in: Poly) -> ClassF:
    """Normalize (P, Q): remove the common factor, rescale constant terms to 1.

    The pair represents the *function* w*p_in/q_in, so after reduction the
    constant terms must coincide (F'(0) = 1); otherwise the function is not
    in the class.
    """
    if p_in.is_zero() or q_in.is_zero():
        raise NotInClass("P and Q must be nonzero")
    if p_in(0) == 0 or q_in(0) == 0:
        raise NotInClass("P(0) and Q(0) must be nonzero")
    g = poly_gcd(p_in, q_in)
    if not g.is_constant():
        p_in, q_in = p_in.exact_div(g), q_in.exact_div(g)
    if p_in(0) != q_in(0):
        raise NotInClass("F'(0) != 1: constant terms differ after reduction")
    c = 1 / p_in(0)
    return ClassF(p_in * c, q_in * c)


def r_transform(f: ClassF) -> RatFun:
    """R(w) = w/F(w) - 1 = (Q - P)/P, reduced; R(0) = 0."""
    return make_ratfun(f.Q - f.P, f.P)


def from_r(r: RatFun) -> ClassF:
    """The class member with R-transform r: F = w/(1 + R)."""
    if r.num(0) != 0:
        raise InvalidRTransform("R(0) must be 0")
    if r.den(0) == 0:
        raise InvalidRTransform("R must be finite at 0")
    return make_classf(r.den, r.den + r.num)


def poly_r(coeffs) -> RatFun:
    """Convenience: a polynomial R-transform from low-first coefficients."""
    return make_ratfun(Poly(coeffs), Poly.one())


def translate(f: ClassF, u) -> ClassF:
    """F/(1 + u F): adds u*w to the R-transform."""
    u = as_rat(u)
    w = Poly.x()
    return make_classf(f.P, f.Q + u * w * f.P)


def dilate(f: ClassF, c) -> ClassF:
    """F(c w)/c: R-transform becomes R(c w), moments scale by c^n."""
    c = as_rat(c)
    if c == 0:
        raise ValueError("dilation by 0")
    return make_classf(f.P.scale_arg(c), f.Q.scale_arg(c))


def boxplus(f1: ClassF, f2: ClassF) -> ClassF:
    """Free convolution: R-transforms add."""
    num = f1.P * f2.P
    den = f1.P * f2.Q + f2.P * f1.Q - f1.P * f2.P
    return make_classf(num, den)


def free_power(f: ClassF, t) -> ClassF:
    """Free power: R-transform scales by t (any rational t)."""
    t = as_rat(t)
    return make_classf(f.P, f.P + t * (f.Q - f.P))


def compose(f2: ClassF, f1: ClassF) -> ClassF:
    """F2(F1(w)), the class member of the monotone convolution mu1 |> mu2.

    Substituting F1 = w*P1/Q1 into F2 = y*P2(y)/Q2(y) and clearing with
    Q1^D, D = max(deg P2, deg Q2), gives
    F2(F1) = w * (P1 * P2^h) / (Q1 * Q2^h) with X^h the homogenized X(F1).
    """
    d = max(f2.P.degree, f2.Q.degree, 0)
    return make_classf(f1.P * _homogenized(f2.P, f1, d),
                       f1.Q * _homogenized(f2.Q, f1, d))


def _homogenized(p: Poly, f: ClassF, d: int) -> Poly:
    """Q1^d * p(w*P1/Q1) as a polynomial (d >= deg p)."""
    y = Poly.x() * f.P
    acc = Poly.zero()
    for i, c in enumerate(p.coeffs):
        acc = acc + c * y**i * f.Q ** (d - i)
    return acc


def moments(f: ClassF, n: int) -> SeriesPrefix:
    """Exact moments s_0..s_n by two independent routes; must agree.

    Route A inverts F as a power series (Newton); route B runs the free
    cumulant-to-moment convolution recursion
    s_k = sum_{j>=1} r_j * [z^(k-j)] M(z)^j.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    d = invert_f_series(f.P, f.Q, n + 1)
    s_a = d[1: n + 2]

    r = _cumulant_series(f, n)
    s_b = _moments_from_cumulants(r, n)
    if s_a != s_b:
        raise ComputationError(
            "moment extraction routes disagree: series inversion vs cumulant recursion")
    return SeriesPrefix(tuple(s_a), "moments")


def _cumulant_series(f: ClassF, n: int):
    rf = r_transform(f)
    return ser_div(ser_trunc(list(rf.num.coeffs), n), ser_trunc(list(rf.den.coeffs), n), n)


def _moments_from_cumulants(r, n: int):
    """s_0..s_n from cumulants r via s_k = sum_j r_j * [z^(k-j)] M(z)^j.

    mp(j, m) = [z^m] M(z)^j is memoized; an entry at index m only touches
    s[0..m], which is final before any s_k with k > m is requested.
    """
    s = [Rat(1)] + [Rat(0)] * n
    mpow = {}

    def mp(j, m):
        if j == 0:
            return Rat(1) if m == 0 else Rat(0)
        row = mpow.setdefault(j, [None] * (n + 1))
        if row[m] is None:
            row[m] = sum((s[i] * mp(j - 1, m - i) for i in range(m + 1)), Rat(0))
        return row[m]

    for k in range(1, n + 1):
        s[k] = sum((r[j] * mp(j, k - j) for j in range(1, k + 1)), Rat(0))
    return s


def cumulants(f: ClassF, n: int) -> SeriesPrefix:
    """Free cumulants r_1..r_n (index 0 holds the structural 0)."""
    if n < 1:
        raise ValueError("need n >= 1")
    r = _cumulant_series(f, n)
    return SeriesPrefix(tuple(r[: n + 1]), "cumulants")


def identity_f() -> ClassF:
    """F(w) = w, the neutral element of free convolution."""
    return ClassF(Poly.one(), Poly.one())
