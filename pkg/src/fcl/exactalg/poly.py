"""Dense exact polynomials over arbitrary-precision rationals.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial has an empty coefficient tuple.  Everything is exact: no
floating point enters unless the caller evaluates at a float/complex point.
"""
from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


def as_rat(x) -> Rat:
    """Coerce ints, strings like '27/8' and Fractions to Fraction."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, str):
        return Rat(x)
    return Rat(x)


def rat_str(x: Rat) -> str:
    """Render a rational as 'p' or 'p/q' (exact, never decimal)."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Poly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def const(c) -> "Poly":
        return Poly((as_rat(c),))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def monomial(c, n: int) -> "Poly":
        return Poly((0,) * n + (as_rat(c),))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Rat:
        """Leading coefficient (of the zero polynomial: 0)."""
        return self.coeffs[-1] if self.coeffs else Rat(0)

    def coeff(self, i: int) -> Rat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Rat(0)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Rat)):
            return Poly([c * other for c in self.coeffs])
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Rat(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rat)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus / evaluation -----------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; works for Fraction, float, complex, intervals."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return x * 0
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.const(c)
        return acc

    def scale_arg(self, c) -> "Poly":
        """p(c*w) for a rational c."""
        c = as_rat(c)
        return Poly([a * c**i for i, a in enumerate(self.coeffs)])

    # -- division ------------------------------------------------------

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Rat(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        d, lc = other.degree, other.lc
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            f = rem[-1] / lc
            q[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= f * b
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(q), Poly(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    # -- integer form --------------------------------------------------

    def int_coeffs(self):
        """Primitive integer coefficients and the scale s with self = s * prim."""
        if self.is_zero():
            return [], Rat(1)
        den = math.lcm(*[c.denominator for c in self.coeffs])
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = math.gcd(*[abs(v) for v in ints])
        ints = [v // g for v in ints]
        return ints, Rat(g, den)

    # -- printing --------------------------------------------------------

    def __repr__(self):
        return f"Poly({self.to_str()})"

    def to_str(self, var: str = "w") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = rat_str(mag)
            else:
                v = var if i == 1 else f"{var}^{i}"
                term = v if mag == 1 else f"{rat_str(mag)}*{v}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rat)):
        return Poly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if p.is_constant():
        return Poly.one()
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def is_squarefree(p: Poly) -> bool:
    if p.is_zero():
        return False
    return p.is_constant() or poly_gcd(p, p.derivative()).is_constant()


# -- determinants and resultants over the rationals ----------------------


def bareiss_det_int(m) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_rat(m) -> Rat:
    """Exact determinant of a square matrix of Fractions.

    Rows are scaled to integers first so Bareiss elimination stays
    fraction-free throughout.
    """
    n = len(m)
    if n == 0:
        return Rat(1)
    scale = Rat(1)
    ints = []
    for row in m:
        den = math.lcm(*[as_rat(x).denominator for x in row]) if row else 1
        scale *= den
        ints.append([as_rat(x).numerator * (den // as_rat(x).denominator) for x in row])
    return Rat(bareiss_det_int(ints)) / scale


def sylvester_matrix(a, b, n: int, m: int):
    """(n+m) x (n+m) Sylvester matrix for coefficient sequences of degrees n, m.

    `a`, `b` are lowest-first coefficient lists padded/truncated to the given
    formal degrees (entries may be any ring elements).
    """
    size = n + m
    zero = a[0] * 0
    rows = []
    arev = list(reversed(a))  # highest first
    brev = list(reversed(b))
    for i in range(m):
        rows.append([zero] * i + arev + [zero] * (size - i - len(arev)))
    for i in range(n):
        rows.append([zero] * i + brev + [zero] * (size - i - len(brev)))
    return rows


def resultant(p: Poly, q: Poly) -> Rat:
    """Resultant of two rational polynomials (formal degrees = actual)."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    n, m = p.degree, q.degree
    if n == 0:
        return p.lc ** m
    if m == 0:
        return q.lc ** n
    return det_rat(sylvester_matrix(list(p.coeffs), list(q.coeffs), n, m))
