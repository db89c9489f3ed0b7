"""Characteristic polynomials, the multiple-root locus, and phase transitions.

chi_F = (P + wP')Q - wPQ' is the numerator of F'; its real-rootedness is
the strong (rr0) membership test.  The weaker rr test asks that every z
for which wP - zQ acquires a multiple root is real; that set is cut out by
a resultant in z, cleaned of artifacts introduced by leading-coefficient
collapse of the generic Sylvester matrix.

chi_t, the characteristic polynomial of the free power flow, is linear in
t.  Its t-independent factor g = gcd of the two pencil parts is split off
before eliminating w: g cannot create or destroy transitions (it is the
same polynomial at every t), while leaving it in would make the resultant
vanish identically whenever g has a multiple root.  Critical t values are
then the real roots of the cleaned eliminant (multiple-root kind) together
with parameter values where the moving part drops degree by at least two.

Real-rootedness *at* an irrational critical t0 is decided by deflating the
structurally forced double root (its location is a rational expression in
t0 via the first subresultant) and certifying the cofactor with interval
arithmetic; certification of an open condition terminates, boundary cases
degenerate to Unknown rather than a guess.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key

from .classf import ClassF, free_power
from .errors import DegenerateEliminant
from .exactalg import (AlgebraicReal, BiPoly, Iv, Poly, Rat, as_rat,
                       count_distinct_real_roots, is_real_rooted,
                       isolate_real_roots, iv_poly_eval, poly_gcd,
                       resultant_w, squarefree_part)
from .exactalg.bipoly import _bareiss_det_poly
from .exactalg.poly import sylvester_matrix


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# ----------------------------------------------------------------------
# characteristic polynomials


def char_poly(f: ClassF) -> Poly:
    """chi_F = (P + wP')Q - wPQ'; always has constant term 1."""
    w = Poly.x()
    return (f.P + w * f.P.derivative()) * f.Q - w * f.P * f.Q.derivative()


def char_poly_t(f: ClassF) -> BiPoly:
    """chi of the free power flow: P^2 + t[(P+wP')(Q-P) - wP(Q'-P')]."""
    w = Poly.x()
    p, q = f.P, f.Q
    a = p * p
    b = (p + w * p.derivative()) * (q - p) - w * p * (q.derivative() - p.derivative())
    return BiPoly.from_linear(a, b)


def is_rr0(f: ClassF) -> bool:
    """All roots of chi_F real (constants vacuously)."""
    return is_real_rooted(char_poly(f))


def is_singular(f: ClassF) -> bool:
    """chi_F has a multiple *real* root."""
    chi = char_poly(f)
    if chi.is_constant():
        return False
    g = poly_gcd(chi, chi.derivative())
    if g.is_constant():
        return False
    return count_distinct_real_roots(squarefree_part(g)) >= 1


def boundary_diagnostics(f: ClassF) -> dict:
    """Degree deficiency and singularity flags for boundary analysis."""
    chi = char_poly(f)
    deficient = chi.degree <= f.P.degree + f.Q.degree - 2
    return {"degree_deficient": deficient, "singular": is_singular(f),
            "chi_degree": chi.degree}


# ----------------------------------------------------------------------
# the multiple-root locus in z


@dataclass(frozen=True)
class NSetResult:
    z_poly: Poly                      # cleaned squarefree eliminant in z
    real_members: tuple               # AlgebraicReal, ascending
    nonreal_pair_count: int

    @property
    def all_real(self) -> bool:
        return self.nonreal_pair_count == 0


def _strip_artifact_roots(eliminant: Poly, candidates, genuine) -> Poly:
    """Remove linear factors at non-genuine leading-collapse roots."""
    out = eliminant
    for tau in candidates:
        if out(tau) == 0 and not genuine(tau):
            out = out.exact_div(Poly([-tau, 1]))
    return out


def _rational_roots(p: Poly):
    return [r.as_fraction() for r in isolate_real_roots(p)
            if r.as_fraction() is not None] if not p.is_constant() else []


def n_set(f: ClassF) -> NSetResult:
    """Eliminate w from {wP - zQ = 0, (wP - zQ)' = 0} and isolate real z."""
    w = Poly.x()
    a = BiPoly.from_linear(w * f.P, -f.Q)
    b = a.deriv_w()
    raw = resultant_w(a, b)
    if raw.is_zero():
        raise DegenerateEliminant("eliminant in z vanished identically")
    sq = squarefree_part(raw)

    def genuine(z0) -> bool:
        pz = w * f.P - z0 * f.Q
        if pz.is_zero() or pz.is_constant():
            return False
        return not poly_gcd(pz, pz.derivative()).is_constant()

    # both leading coefficients collapse together (b = a'), at roots of lc(a)
    sq = _strip_artifact_roots(sq, _rational_roots(a.lc_poly), genuine)
    if sq.is_constant():
        return NSetResult(sq, (), 0)
    members = tuple(isolate_real_roots(sq))
    pairs, rem = divmod(sq.degree - len(members), 2)
    assert rem == 0
    return NSetResult(sq, members, pairs)


def is_rr(f: ClassF) -> bool:
    return n_set(f).nonreal_pair_count == 0


# ----------------------------------------------------------------------
# critical t values of the free power flow


@dataclass(frozen=True)
class CriticalReport:
    t_lo: Rat
    t_hi: Rat
    criticals: tuple                  # AlgebraicReal, ascending
    kinds: tuple                      # 'multiple_root' | 'degree_drop' | 'both'
    rr0_verdicts: tuple               # Verdict per open interval (len = criticals+1)
    samples: tuple                    # rational sample point per interval


def moving_part(x: BiPoly):
    """Split chi_t = g(w) * (A + tB) with g the t-independent content."""
    a = Poly([c.coeff(0) for c in x.wcoeffs])
    b = Poly([c.coeff(1) for c in x.wcoeffs])
    if x.max_param_degree() > 1:
        raise ValueError("pencil expected to be linear in the parameter")
    if b.is_zero():
        g = a
        return g, BiPoly.from_linear(Poly.one(), Poly.zero())
    g = poly_gcd(a, b)
    if g.is_constant():
        return Poly.one(), x
    return g, BiPoly.from_linear(a.exact_div(g), b.exact_div(g))


def cleaned_critical_eliminant(f: ClassF):
    """(g, moving part, cleaned squarefree resultant in t).

    A constant moving part (chi_t does not actually move) has no critical
    values; the eliminant degenerates to 1.
    """
    x = char_poly_t(f)
    g, xh = moving_part(x)
    if xh.degree_w <= 0:
        return g, xh, Poly.one()
    rho_raw = resultant_w(xh, xh.deriv_w())
    if rho_raw.is_zero():
        raise DegenerateEliminant("resultant of chi_t and its w-derivative is zero")
    rho = squarefree_part(rho_raw)

    def genuine(t0) -> bool:
        pt = xh.eval_param(t0)
        if pt.is_constant():
            return False
        return not poly_gcd(pt, pt.derivative()).is_constant()

    rho = _strip_artifact_roots(rho, _rational_roots(xh.lc_poly), genuine)
    return g, xh, rho


def _strictly_inside(r: AlgebraicReal, lo: Rat, hi: Rat):
    """r refined to sit strictly inside (lo, hi), or None."""
    if r.compare_rational(lo) <= 0 or r.compare_rational(hi) >= 0:
        return None
    a = r
    while not (lo < a.lo and a.hi < hi):
        a = a._bisect_once()
    return a


def critical_ts(f: ClassF, t_lo, t_hi) -> CriticalReport:
    """Critical t values in (t_lo, t_hi) plus rr0 verdicts between them."""
    t_lo, t_hi = as_rat(t_lo), as_rat(t_hi)
    if not t_lo < t_hi:
        raise ValueError("need t_lo < t_hi")
    g, xh, rho = cleaned_critical_eliminant(f)

    crits = []
    if not rho.is_constant():
        for r in isolate_real_roots(rho):
            r2 = _strictly_inside(r, t_lo, t_hi)
            if r2 is not None:
                crits.append([r2, "multiple_root"])

    # degree drops by >= 2: top coefficient root where the next one vanishes too
    generic_deg = xh.degree_w
    for tau in _rational_roots(xh.lc_poly):
        if not t_lo < tau < t_hi:
            continue
        if xh.eval_param(tau).degree <= generic_deg - 2:
            hit = False
            for c in crits:
                if c[0].equals_rational(tau):
                    c[1] = "both"
                    hit = True
            if not hit:
                crits.append([AlgebraicReal.from_rational(tau), "degree_drop"])

    crits.sort(key=cmp_to_key(lambda a, b: -1 if a[0] < b[0] else 1))
    crits = _disjoint(crits)

    samples, verdicts = [], []
    bounds_lo = [t_lo] + [c[0].hi for c in crits]
    bounds_hi = [c[0].lo for c in crits] + [t_hi]
    for a, b in zip(bounds_lo, bounds_hi):
        s = (a + b) / 2
        samples.append(s)
        verdicts.append(Verdict.YES if is_rr0(free_power(f, s)) else Verdict.NO)

    return CriticalReport(t_lo, t_hi,
                          tuple(c[0] for c in crits),
                          tuple(c[1] for c in crits),
                          tuple(verdicts), tuple(samples))


def _disjoint(crits):
    """Refine consecutive criticals until their intervals are disjoint."""
    for i in range(len(crits) - 1):
        a, b = crits[i][0], crits[i + 1][0]
        while a.hi >= b.lo:
            a, b = a._bisect_once(), b._bisect_once()
        crits[i][0], crits[i + 1][0] = a, b
    return crits


# ----------------------------------------------------------------------
# rr0 at an exact algebraic parameter value


def rr0_at_algebraic_t(f: ClassF, t0, max_precision: int = 256) -> Verdict:
    """Tri-state real-rootedness of chi_{t0} for an exact algebraic t0.

    Rational t0 goes through the exact path.  Otherwise the verdict comes
    from interval certification at doubling precision: directly when t0 is
    not on the multiple-root locus, after deflating the forced double root
    when it is.  Unknown means precision exhaustion, never a guess.
    """
    if isinstance(t0, (int, Fraction)):
        return Verdict.YES if is_rr0(free_power(f, t0)) else Verdict.NO
    q = t0.as_fraction()
    if q is not None:
        return Verdict.YES if is_rr0(free_power(f, q)) else Verdict.NO

    x = char_poly_t(f)
    g, xh = moving_part(x)
    if not is_real_rooted(g):
        return Verdict.NO
    _, _, rho = cleaned_critical_eliminant(f)

    if not t0.is_root_of(rho):
        return _interval_rr_decision(_pencil_coeff_polys(xh), t0, max_precision)

    # on the locus: resultant zero + nonzero first principal subresultant
    # coefficient pins the gcd degree to exactly 1 (one double root)
    s1 = _first_subresultant(xh)
    if s1 is None or t0.is_root_of(s1[1]):
        return Verdict.UNKNOWN
    return _deflated_rr_decision(xh, s1, t0, max_precision)


def _pencil_coeff_polys(xh: BiPoly):
    """Coefficient polynomials c_i(t) of the moving part."""
    return list(xh.wcoeffs)


def _iv_coeffs(coeff_polys, tiv: Iv):
    return [iv_poly_eval(c.coeffs, tiv) for c in coeff_polys]


def _interval_rr_decision(coeff_polys, t0: AlgebraicReal, max_precision: int) -> Verdict:
    """Certify all-roots-real (or not) for a squarefree specialization."""
    width = Fraction(1, 2**16)
    floor_width = Fraction(1, 10 ** max_precision)
    a = t0
    while True:
        a = a.refined_to(width)
        civ = _iv_coeffs(coeff_polys, a.interval)
        v = _certify_interval_poly(civ)
        if v is not Verdict.UNKNOWN:
            return v
        if width < floor_width:
            return Verdict.UNKNOWN
        width = width * width


def _certify_interval_poly(civ) -> Verdict:
    """Decide all-real for an interval polynomial, if the enclosure allows.

    YES by exhibiting deg-many sign alternations at rational points (taken
    from the exactly isolated roots of the rational midpoint polynomial);
    NO by an interval Sturm count falling short of the degree.
    """
    # effective degree: leading intervals that are exactly zero are stripped,
    # an undetermined leading sign blocks certification
    while civ and civ[-1].sign() == 0:
        civ = civ[:-1]
    if not civ:
        return Verdict.UNKNOWN
    if civ[-1].sign() is None:
        return Verdict.UNKNOWN
    deg = len(civ) - 1
    if deg <= 1:
        return Verdict.YES
    if deg == 2:
        disc = civ[1] * civ[1] - 4 * civ[2] * civ[0]
        s = disc.sign()
        if s == 1 or s == 0:
            return Verdict.YES
        if s == -1:
            return Verdict.NO
        return Verdict.UNKNOWN

    # candidate separating points from a low-precision rational midpoint poly
    mid = Poly([c.mid.limit_denominator(1 << 48) for c in civ])
    mid_sq = squarefree_part(mid) if not mid.is_zero() else mid
    if mid_sq.degree == deg and count_distinct_real_roots(mid_sq) == deg:
        pts = _separating_points(mid_sq)
        signs = [iv_poly_eval(civ, Iv(p)).sign() for p in pts]
        if all(s in (1, -1) for s in signs) and all(
                signs[i] * signs[i + 1] < 0 for i in range(len(signs) - 1)):
            return Verdict.YES
    cnt = _interval_sturm_real_count(civ)
    if cnt is not None and cnt < deg:
        return Verdict.NO
    return Verdict.UNKNOWN


def _separating_points(p: Poly):
    """deg+1 rationals strictly interlacing the real roots of squarefree p."""
    roots = [r.refined_to(Fraction(1, 10**6))
             for r in isolate_real_roots(p, rationalize=False)]
    pts = [roots[0].lo - 1]
    for a, b in zip(roots, roots[1:]):
        while a.hi >= b.lo:
            a, b = a._bisect_once(), b._bisect_once()
        pts.append((a.hi + b.lo) / 2)
    pts.append(roots[-1].hi + 1)
    return pts


def _interval_sturm_real_count(civ):
    """Distinct real roots common to every member of the interval family.

    Returns None when the chain cannot be completed with certainty (a
    leading interval straddles zero).
    """
    def strip(c):
        while c and c[-1].sign() == 0:
            c = c[:-1]
        return c

    p0 = strip(list(civ))
    if not p0 or p0[-1].sign() is None:
        return None
    p1 = strip([i * c for i, c in enumerate(p0)][1:])
    chain = [p0, p1]
    while True:
        prev, cur = chain[-2], chain[-1]
        cur = strip(cur)
        if not cur:
            chain.pop()
            break
        if cur[-1].sign() is None:
            return None
        chain[-1] = cur
        if len(cur) == 1:
            break
        rem = _iv_poly_mod(prev, cur)
        if rem is None:
            return None
        chain.append([-c for c in rem])
    sign_hi = []
    sign_lo = []
    for p in chain:
        s = p[-1].sign()
        if s is None or s == 0:
            return None
        sign_hi.append(s)
        sign_lo.append(s * (-1) ** (len(p) - 1))
    def vari(ss):
        return sum(1 for x, y in zip(ss, ss[1:]) if x * y < 0)
    return vari(sign_lo) - vari(sign_hi)


def _iv_poly_mod(a, b):
    """Remainder of interval polynomials; None when a division is blocked."""
    rem = list(a)
    lead = b[-1]
    if lead.sign() in (None, 0):
        return None
    while len(rem) >= len(b):
        f = rem[-1] / lead
        k = len(rem) - len(b)
        for j, c in enumerate(b):
            rem[k + j] = rem[k + j] - f * c
        rem.pop()
        while rem and rem[-1].sign() == 0:
            rem.pop()
        if rem and rem[-1].sign() is None:
            return None
    return rem


def _first_subresultant(xh: BiPoly):
    """S_1 of (moving part, its w-derivative) as (s10, s11) in Q[t].

    Determinant-polynomial form, so it commutes with specializing t.
    """
    a, b = xh, xh.deriv_w()
    n, m = a.degree_w, b.degree_w
    if n < 2 or m < 1 or n + m - 2 < 1:
        return None
    rows = sylvester_matrix(list(a.wcoeffs), list(b.wcoeffs), n, m)
    # rows of w^i * a for i = m-2..0 and w^j * b for j = n-2..0, columns
    # highest degree first; drop one shift row of each block relative to
    # the full Sylvester matrix
    arows = rows[1:m]           # m-1 rows
    brows = rows[m + 1:]        # n-1 rows
    sub = [r[1:] for r in arows + brows]   # degrees n+m-2 .. 0
    r = len(sub)                # n+m-2 rows, n+m-1 columns
    if r == 0:
        return None
    base = [row[: r - 1] for row in sub]
    s11 = _bareiss_det_poly([base[i] + [sub[i][r - 1]] for i in range(r)])
    s10 = _bareiss_det_poly([base[i] + [sub[i][r]] for i in range(r)])
    return (s10, s11)


def _deflated_rr_decision(xh: BiPoly, s1, t0: AlgebraicReal,
                          max_precision: int) -> Verdict:
    """Certify chi_{t0} all-real after peeling the forced double root."""
    s10, s11 = s1
    coeff_polys = _pencil_coeff_polys(xh)
    width = Fraction(1, 2**16)
    floor_width = Fraction(1, 10 ** max_precision)
    a = t0
    while True:
        a = a.refined_to(width)
        tiv = a.interval
        den = iv_poly_eval(s11.coeffs, tiv)
        if den.sign() in (None, 0):
            v = Verdict.UNKNOWN
        else:
            w0 = -iv_poly_eval(s10.coeffs, tiv) / den
            civ = _iv_coeffs(coeff_polys, tiv)
            v1 = _iv_deflate(civ, w0)
            v2 = _iv_deflate(v1, w0) if v1 is not None else None
            if v2 is None:
                v = Verdict.UNKNOWN
            else:
                v = _certify_interval_poly(v2)
        if v is not Verdict.UNKNOWN:
            return v
        if width < floor_width:
            return Verdict.UNKNOWN
        width = width * width


def _iv_deflate(civ, w0: Iv):
    """Synthetic division by (w - w0) over intervals; drops the remainder.

    Valid as an enclosure of the true quotient because the true remainder
    is exactly zero (w0 encloses a genuine double root).
    """
    if len(civ) < 2:
        return None
    out = []
    acc = civ[-1]
    for c in reversed(civ[:-1]):
        out.append(acc)
        acc = acc * w0 + c
    return list(reversed(out))


# ----------------------------------------------------------------------
# closed-form regions for polynomial R-transforms


def deg3_rr0(a, b, c) -> bool:
    """rr0 test for F = w(1 + a w + b w^2 + c w^3), in closed form."""
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    return 9 * a**2 * b**2 - 27 * b**3 - 32 * a**3 * c + 108 * a * b * c - 108 * c**2 >= 0


def r3_poly_rr0(b, c) -> bool:
    """rr0 test for R = u w + b w^2 + c w^3 with b > 0: 27 c^2 <= b^3."""
    b, c = as_rat(b), as_rat(c)
    if b <= 0:
        raise ValueError("need b > 0")
    return 27 * c**2 <= b**3


def r4_singular_params(b, v):
    """The (c, d) on the singular curve of R = b w^2 + c w^3 + d w^4."""
    b, v = as_rat(b), as_rat(v)
    return (v * (b - 2 * v**2), v**2 * (b - 3 * v**2) / 3)


def r4_c0_classify(b, d) -> dict:
    """Membership flags for R = b w^2 + d w^4, b > 0."""
    b, d = as_rat(b), as_rat(d)
    if b <= 0:
        raise ValueError("need b > 0")
    return {
        "in_dist": -(b**2) <= 12 * d <= 3 * b**2,
        "in_rr0": -(b**2) <= 12 * d <= 0,
        "on_rr_balloon_top": 4 * d == b**2,
    }


def lb_curve(b, n_samples: int):
    """(c, d) samples of the closed singular curve for fixed b > 0.

    v runs over [-sqrt(b/2), sqrt(b/2)] with rationally under-approximated
    endpoints, mapped through r4_singular_params.
    """
    import math as _math
    b = as_rat(b)
    if b <= 0:
        raise ValueError("need b > 0")
    if n_samples < 2:
        raise ValueError("need at least two samples")
    scale = 10**9
    half = b / 2
    vmax = Fraction(_math.isqrt(half.numerator * half.denominator * scale**2),
                    half.denominator * scale)
    step = 2 * vmax / (n_samples - 1)
    return [r4_singular_params(b, -vmax + i * step) for i in range(n_samples)]


def cg_region(k3, k4) -> bool:
    """Exact membership of (kappa3, kappa4) in the degree-4 cumulant body.

    The two bounding inequalities involve nested square roots; both are
    decided by sign analysis plus squaring over the rationals, boundary
    points counting as inside.
    """
    x, y = as_rat(k3), as_rat(k4)
    # lower lobe: -1/12 <= y <= 1/36,
    # 54 x^2 <= 4 - 3u + u^(3/2) with u = 1 - 36 y in [0, 4]
    if Fraction(-1, 12) <= y <= Fraction(1, 36):
        u = 1 - 36 * y
        lhs = 54 * x**2 - 4 + 3 * u
        if lhs <= 0 or lhs**2 <= u**3:
            return True
    # upper lobe: 1/36 < y <= 1/4, x^2 + 48 y^2 <= 24 y^(3/2)
    if Fraction(1, 36) < y <= Fraction(1, 4):
        if (x**2 + 48 * y**2) ** 2 <= 576 * y**3:
            return True
    return False
