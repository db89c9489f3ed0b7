"""Polynomials in w whose coefficients are polynomials in a parameter t.

The resultant in w is computed by evaluation at enough rational parameter
points followed by Lagrange interpolation (degree bound from the Sylvester
dimensions), which is exact; a fraction-free Bareiss elimination over Q[t]
on the same Sylvester matrix serves as an independent fallback route.
Both compute the determinant of the *generic-degree* Sylvester matrix, so
parameter values where leading coefficients collapse may contribute
spurious factors; callers strip those (see the spectra eliminant cleaning).
"""
from __future__ import annotations

from .poly import Poly, Rat, as_rat, sylvester_matrix


class BiPoly:
    """Dense polynomial in w; coefficient of w^i is a Poly in the parameter."""

    __slots__ = ("wcoeffs",)

    def __init__(self, wcoeffs=()):
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in wcoeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.wcoeffs = tuple(cs)

    @staticmethod
    def from_linear(a: Poly, b: Poly) -> "BiPoly":
        """The pencil a(w) + t*b(w)."""
        n = max(len(a.coeffs), len(b.coeffs))
        return BiPoly([Poly([a.coeff(i), b.coeff(i)]) for i in range(n)])

    @staticmethod
    def lift(p: Poly) -> "BiPoly":
        """A parameter-free polynomial in w."""
        return BiPoly([Poly.const(c) for c in p.coeffs])

    # -- queries ---------------------------------------------------------

    @property
    def degree_w(self) -> int:
        return len(self.wcoeffs) - 1

    def is_zero(self) -> bool:
        return not self.wcoeffs

    def coeff(self, i: int) -> Poly:
        return self.wcoeffs[i] if 0 <= i < len(self.wcoeffs) else Poly.zero()

    @property
    def lc_poly(self) -> Poly:
        return self.wcoeffs[-1] if self.wcoeffs else Poly.zero()

    def max_param_degree(self) -> int:
        return max((c.degree for c in self.wcoeffs), default=-1)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _coerce(other)
        n = max(len(self.wcoeffs), len(other.wcoeffs))
        return BiPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly([-c for c in self.wcoeffs])

    def __sub__(self, other) -> "BiPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Rat, Poly)):
            other = BiPoly([other if isinstance(other, Poly) else Poly.const(other)])
        if self.is_zero() or other.is_zero():
            return BiPoly(())
        out = [Poly.zero()] * (len(self.wcoeffs) + len(other.wcoeffs) - 1)
        for i, a in enumerate(self.wcoeffs):
            if not a.is_zero():
                for j, b in enumerate(other.wcoeffs):
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.wcoeffs == other.wcoeffs

    def __hash__(self):
        return hash(self.wcoeffs)

    def deriv_w(self) -> "BiPoly":
        return BiPoly([i * c for i, c in enumerate(self.wcoeffs)][1:])

    def eval_param(self, t) -> Poly:
        """Specialize the parameter to a rational value; returns a Poly in w."""
        t = as_rat(t)
        return Poly([c(t) for c in self.wcoeffs])

    def __repr__(self):
        return f"BiPoly({self.to_str()})"

    def to_str(self, wvar: str = "w", tvar: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.wcoeffs):
            if c.is_zero():
                continue
            cs = c.to_str(tvar)
            if i == 0:
                parts.append(f"({cs})")
            elif i == 1:
                parts.append(f"({cs})*{wvar}")
            else:
                parts.append(f"({cs})*{wvar}^{i}")
        return " + ".join(parts)


def _coerce(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, Poly):
        return BiPoly([x])
    if isinstance(x, (int, Rat)):
        return BiPoly([Poly.const(x)])
    raise TypeError(f"cannot coerce {type(x).__name__} to BiPoly")


def _lagrange_interpolate(points) -> Poly:
    """Exact interpolating polynomial through (x_i, y_i) rational pairs."""
    result = Poly.zero()
    xs = [x for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Poly.one()
        den = Rat(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly([-xj, 1])
                den *= xi - xj
        result = result + num * (yi / den)
    return result


def resultant_w(a: BiPoly, b: BiPoly, method: str = "interp") -> Poly:
    """Resultant of a and b as polynomials in w; a Poly in the parameter.

    Computed for the generic w-degrees of a and b.  Parameter values where
    both leading coefficients vanish are artifacts of the generic Sylvester
    matrix, not solutions; callers must post-process.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of an identically zero polynomial")
    n, m = a.degree_w, b.degree_w
    if n == 0 and m == 0:
        return Poly.one()
    if n == 0:
        return a.coeff(0) ** m
    if m == 0:
        return b.coeff(0) ** n

    if method == "bareiss":
        rows = sylvester_matrix(list(a.wcoeffs), list(b.wcoeffs), n, m)
        return _bareiss_det_poly(rows)

    bound = m * max(a.max_param_degree(), 0) + n * max(b.max_param_degree(), 0)
    lca, lcb = a.lc_poly, b.lc_poly
    points = []
    t = 0
    k = 0
    from .poly import resultant as uni_resultant
    while len(points) < bound + 1:
        t = (k // 2 + 1) * (1 if k % 2 == 0 else -1) if k > 0 else 0
        k += 1
        tv = Rat(t)
        if lca(tv) == 0 or lcb(tv) == 0:
            continue
        pa, pb = a.eval_param(tv), b.eval_param(tv)
        points.append((tv, uni_resultant(pa, pb)))
    return _lagrange_interpolate(points)


def _bareiss_det_poly(rows) -> Poly:
    """Fraction-free Bareiss determinant over the polynomial ring Q[t]."""
    a = [row[:] for row in rows]
    n = len(a)
    if n == 0:
        return Poly.one()
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = Poly.zero()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign
