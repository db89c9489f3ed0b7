"""Numeric evaluation of the inverse series D and Stieltjes inversion.

Two continuation schemes share one Newton core:

* d_eval tracks the branch of F^{-1} with D(0) = 0 along the straight
  segment 0 -> z (step count doubles on failure) — the right tool near
  the origin where the series lives.
* densities need G(x - i*eps) = D(1/(x - i*eps)) for tiny eps, i.e. huge
  |z|, where a straight segment from 0 would hop branches.  There the
  value is reached by vertical descent: start deep in the lower half
  plane where G(zeta) ~ 1/zeta is unambiguous, then shrink Im zeta
  geometrically down to eps, Newton-correcting at each stage.

f(x) = Im G(x - i*eps)/pi extrapolated linearly in eps (Richardson across
the schedule).  Continuation failures are reported as gaps, never
interpolated over.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from .classf import ClassF, moments
from .errors import ContinuationFailure
from .exactalg import Poly
from .spectra import char_poly

_DEFAULT_EPS = (1e-3, 1e-4, 1e-5)


def _float_coeffs(p: Poly):
    return [float(c) for c in p.coeffs]


def _horner(cs, x):
    acc = 0j
    for c in reversed(cs):
        acc = acc * x + c
    return acc


class _Evaluator:
    """Float view of F; Newton acts on the pencil w P(w) - z Q(w).

    The pencil form stays well conditioned where F itself has a pole
    (G approaches such points as eps shrinks at the center of symmetric
    supports), since no near-cancelling division appears.
    """

    def __init__(self, f: ClassF):
        self.p = _float_coeffs(f.P)
        self.q = _float_coeffs(f.Q)
        self.dp = _float_coeffs(f.P.derivative())
        self.dq = _float_coeffs(f.Q.derivative())
        self.chi = _float_coeffs(char_poly(f))

    def f(self, w):
        return w * _horner(self.p, w) / _horner(self.q, w)

    def newton(self, w, z, iters: int = 80):
        """Root of w P(w) - z Q(w) near w, or None (backward-error stop)."""
        for _ in range(iters):
            pw, qw = _horner(self.p, w), _horner(self.q, w)
            resid = w * pw - z * qw
            scale = abs(w * pw) + abs(z * qw) + 1.0
            if abs(resid) <= 5e-14 * scale:
                return w
            deriv = pw + w * _horner(self.dp, w) - z * _horner(self.dq, w)
            if abs(deriv) < 1e-280:
                return None
            step = resid / deriv
            w = w - step
            if abs(step) <= 1e-14 * (1 + abs(w)):
                return w
        return None


def d_eval(f: ClassF, z: complex, path_steps: int = 64) -> complex:
    """The branch of F^{-1} with D(0) = 0, continued along 0 -> z.

    Result satisfies |F(D) - z| < 1e-12 (1 + |z|); ContinuationFailure
    when the path runs too close to a point with F'(w) = 0.
    """
    ev = _Evaluator(f)
    z = complex(z)
    steps = max(2, path_steps)
    while True:
        w = 0j
        ok = True
        for k in range(1, steps + 1):
            w = ev.newton(w, z * k / steps)
            if w is None:
                ok = False
                break
        if ok:
            try:
                ok = abs(ev.f(w) - z) < 1e-12 * (1 + abs(z))
            except ZeroDivisionError:
                ok = False
        if ok:
            return w
        if steps >= 1024:
            raise ContinuationFailure(
                f"branch tracking to z={z} failed at {steps} steps "
                "(path passes near a critical value of F)")
        steps *= 2


def support_radius_estimate(f: ClassF) -> float:
    """Crude spectral radius bound from low moments."""
    s = moments(f, 8).terms
    r = 1.0
    for k in (1, 2, 4, 6, 8):
        r = max(r, abs(float(s[k])) ** (1.0 / k))
    return 2.0 * r + 1.0


def g_eval_descent(f: ClassF, x: float, eps_values, anchor: float) -> list:
    """G(x - i*eta) recorded at each requested eta, by vertical descent.

    Starts at eta = anchor where G ~ 1/zeta identifies the branch, then
    halves eta (visiting every requested value on the way) with Newton
    correction at each stage.
    """
    ev = _Evaluator(f)
    want = sorted(set(float(e) for e in eps_values), reverse=True)
    if not want or want[-1] <= 0:
        raise ValueError("eps values must be positive")

    ladder = []
    eta = max(anchor, 4 * want[0])
    while eta > want[-1]:
        ladder.append(eta)
        eta /= 2
    etas = sorted(set(ladder + want), reverse=True)

    w = 1 / complex(x, -etas[0])
    out = {}
    for eta in etas:
        w = ev.newton(w, 1 / complex(x, -eta))
        if w is None:
            raise ContinuationFailure(
                f"descent to x={x}, eps={eta} lost the branch")
        if eta in want:
            out[eta] = w
    return [out[float(e)] for e in eps_values]


@dataclass(frozen=True)
class DensityTable:
    xs: tuple
    fs: tuple            # density values; None marks a continuation gap
    eps_used: tuple
    mass_estimate: float
    clamped: int         # count of small negatives clamped to 0

    def rows(self):
        return list(zip(self.xs, self.fs))


def _richardson(eps, vals):
    """Neville extrapolation to eps = 0 of a polynomial-in-eps model."""
    v = list(vals)
    e = list(eps)
    n = len(v)
    for level in range(1, n):
        for i in range(n - level):
            v[i] = (e[i] * v[i + 1] - e[i + level] * v[i]) / (e[i] - e[i + level])
    return v[0]


def density_grid(f: ClassF, x_lo: float, x_hi: float, n: int,
                 eps_schedule=_DEFAULT_EPS,
                 clamp_tol: float = 1e-9) -> DensityTable:
    """Tabulate the density on a uniform grid by Stieltjes inversion."""
    if n < 2:
        raise ValueError("need n >= 2")
    eps = tuple(float(e) for e in eps_schedule)
    if not eps or any(e <= 0 for e in eps) or any(a <= b for a, b in zip(eps, eps[1:])):
        raise ValueError("eps schedule must be positive and decreasing")
    anchor = support_radius_estimate(f)
    xs = [x_lo + (x_hi - x_lo) * i / (n - 1) for i in range(n)]
    fs = []
    clamped = 0
    for x in xs:
        try:
            ws = g_eval_descent(f, x, eps, anchor)
        except ContinuationFailure:
            fs.append(None)
            continue
        vals = [w.imag / cmath.pi for w in ws]
        v = _richardson(eps, vals) if len(vals) > 1 else vals[0]
        if v < 0 and v >= -clamp_tol:
            clamped += 1
            v = 0.0
        fs.append(v)
    mass = 0.0
    for (x0, f0), (x1, f1) in zip(zip(xs, fs), zip(xs[1:], fs[1:])):
        if f0 is not None and f1 is not None:
            mass += 0.5 * (f0 + f1) * (x1 - x0)
    return DensityTable(tuple(xs), tuple(fs), eps, mass, clamped)


def reference_density(kind: str, x: float, *params) -> float:
    """Closed-form densities for validation; zero outside the support.

    kind 'wigner' (t): sqrt(4t - x^2) / (2 pi t)
    kind 'mp' (v, t): scaled MP density (absolutely continuous part)
    kind 'expoly': the cube-root density supported on x^2 <= 27
    """
    pi = cmath.pi
    if kind == "wigner":
        (t,) = params
        t = float(t)
        disc = 4 * t - x * x
        return (disc ** 0.5) / (2 * pi * t) if disc > 0 else 0.0
    if kind == "mp":
        v, t = (float(p) for p in params)
        y = x / v
        disc = 4 * t - (y - 1 - t) ** 2
        if disc <= 0 or y == 0:
            return 0.0
        return (disc ** 0.5) / (2 * pi * y) / abs(v)
    if kind == "expoly":
        if x * x >= 27:
            return 0.0
        s27 = 27 ** 0.5
        ratio = (s27 + x) / (s27 - x)
        c = ratio ** (1.0 / 3)
        return 1.0 / (pi * (c + 1 + 1 / c))
    raise ValueError(f"unknown reference density {kind!r}")


def density_csv(table: DensityTable) -> str:
    """CSV emission: header x,f; gaps leave the f field empty."""
    lines = ["x,f"]
    for x, v in table.rows():
        lines.append(f"{x!r},{'' if v is None else repr(v)}")
    return "\n".join(lines) + "\n"
