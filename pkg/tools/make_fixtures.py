#!/usr/bin/env python3
"""Regenerate the bundled sequence fixtures.

Every fixture's terms come from a route independent of the library:
classical closed forms, brute-force permutation statistics, or fixed-point
series reversion of the defining rational function carried out here with
sympy rationals.  Hand-entered canonical OEIS prefixes are cross-checked
against the mathematical definition before being written; any mismatch
aborts generation.
"""
import json
import math
import pathlib
import sys
from itertools import permutations

import sympy

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "fcl" / "fixtures"

R = sympy.Rational


# --- independent series reversion -------------------------------------
# F = w*P(w)/Q(w);  D solves F(D(z)) = z, computed by the contraction
# D <- z * Q(D)/P(D), one correct order per sweep.  Plain truncated list
# arithmetic over sympy.Rational.


def _tmul(a, b, n):
    out = [R(0)] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), n + 1 - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _tdiv(a, b, n):
    out = [R(0)] * (n + 1)
    inv = 1 / b[0]
    for k in range(n + 1):
        acc = a[k] if k < len(a) else R(0)
        for j in range(1, k + 1):
            if j < len(b) and b[j] and out[k - j]:
                acc -= b[j] * out[k - j]
        out[k] = acc * inv
    return out


def _tpolyval(coeffs, d, n):
    acc = [R(0)] * (n + 1)
    for c in reversed(coeffs):
        acc = _tmul(acc, d, n)
        acc[0] += c
    return acc


def revert_moments(p_coeffs, q_coeffs, n):
    """s_0..s_n of F = w*P/Q by fixed-point reversion (independent route)."""
    p = [R(c) for c in p_coeffs]
    q = [R(c) for c in q_coeffs]
    order = n + 1
    d = [R(0), R(1)]
    for _ in range(order + 1):
        qd = _tpolyval(q, d, order)
        pd = _tpolyval(p, d, order)
        ratio = _tdiv(qd, pd, order)
        d = [R(0)] + ratio[:order]  # z * Q(D)/P(D)
    return d[1: n + 2]


def ratfun_to_pq(r_num, r_den, w):
    """F = w/(1+R) as (P, Q) coefficient lists for R = r_num/r_den."""
    one_plus = sympy.together(1 + r_num / r_den)
    num, den = sympy.fraction(sympy.cancel(one_plus))
    p = sympy.Poly(den, w).all_coeffs()[::-1]
    q = sympy.Poly(num, w).all_coeffs()[::-1]
    c = R(p[0])
    return [R(x) / c for x in p], [R(x) / c for x in q]


# --- closed forms ------------------------------------------------------


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def fuss_even(r, m):
    return math.comb(2 * m * r + r, m) * r // (2 * m * r + r)


def a085614(n):
    def dfact(k):
        out = 1
        while k > 1:
            out *= k
            k -= 2
        return out
    return 2**n * dfact(3 * n) // (math.factorial(n + 1) * dfact(n))


# --- permutation statistics --------------------------------------------


def descents(perm):
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def eulerian_rows(kmax):
    """Row k: counts of permutations of S_k by descents (k >= 1); row 0 = [1]."""
    rows = [[1]]
    for k in range(1, kmax + 1):
        row = [0] * k
        for p in permutations(range(1, k + 1)):
            row[descents(p)] += 1
        rows.append(row)
    return rows


def conger_rows(kmax):
    """Row k: sigma in S_{k+2}, sigma(1) = 2, by descents-1 (i = 0..)."""
    rows = []
    for k in range(kmax + 1):
        n = k + 2
        row = [0] * max(1, k)
        rest = [x for x in range(1, n + 1) if x != 2]
        for tail in permutations(rest):
            d = descents((2,) + tail)
            row[d - 1] += 1
        rows.append(row)
    return rows


# --- fixture table ------------------------------------------------------

w = sympy.symbols("w")
N = 15  # default number of moment terms generated (s_0..s_14)


def mp_delta(s, u, v):
    """F of MP(u, s) translated by v."""
    r_num = s * u * w / (1 - u * w) + v * w
    return ratfun_to_pq(sympy.together(r_num), sympy.Integer(1), w)


def w_delta(s, u):
    """F of the semicircle W(s) translated by u: w/(1 + uw + sw^2)."""
    return [1], [1, R(u), R(s)]


def from_r_expr(expr):
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    return ratfun_to_pq(num, den, w)


def compose_f(outer_pq, inner_pq):
    """(P, Q) of F2(F1(w)) for F given as coefficient pairs."""
    def to_expr(pq):
        p, q = pq
        pe = sum(R(c) * w**i for i, c in enumerate(p))
        qe = sum(R(c) * w**i for i, c in enumerate(q))
        return w * pe / qe
    y = sympy.symbols("y")
    p2, q2 = outer_pq
    f2 = y * sum(R(c) * y**i for i, c in enumerate(p2)) / sum(R(c) * y**i for i, c in enumerate(q2))
    comp = sympy.cancel(sympy.together(f2.subs(y, to_expr(inner_pq))))
    num, den = sympy.fraction(comp)
    pnum = sympy.Poly(sympy.cancel(num / w), w).all_coeffs()[::-1]
    qden = sympy.Poly(den, w).all_coeffs()[::-1]
    c = R(pnum[0])
    return [R(x) / c for x in pnum], [R(x) / c for x in qden]


FIXTURES = []


def seq_fixture(a, terms, *, offset=0, align=0, note, check_prefix=None):
    terms = [int(t) for t in terms]
    if check_prefix is not None:
        k = len(check_prefix)
        assert terms[:k] == [int(x) for x in check_prefix], (a, terms[:k], check_prefix)
    FIXTURES.append({"a_number": a, "offset": offset, "terms": [str(t) for t in terms],
                     "align": align, "note": note, "source": "bundled"})


def moments_fixture(a, pq, *, known=None, note, n=N, evens_only=False,
                    paper_prefix=None, offset=0):
    """Fixture from an exact moment computation, aligned against a known
    OEIS prefix when one is supplied."""
    p, q = pq
    s = revert_moments(p, q, 2 * n if evens_only else n)
    if evens_only:
        assert all(s[2 * m + 1] == 0 for m in range(n)), a
        s = [s[2 * m] for m in range(n + 1)]
    assert all(x == int(x) for x in s), (a, "non-integer moments")
    s = [int(x) for x in s]
    if paper_prefix is not None:
        assert s[: len(paper_prefix)] == list(paper_prefix), (a, s, paper_prefix)
    if known is None:
        seq_fixture(a, s, note=note, align=0, offset=offset)
        return
    align = None
    for k in range(0, 4):
        ln = min(len(s), len(known) - k)
        if ln >= 8 and all(int(known[k + i]) == s[i] for i in range(ln)):
            align = k
            break
    assert align is not None, (a, "known prefix does not align", s[:8], known[:10])
    seq_fixture(a, known, note=note + f" (moment n sits at index {align})",
                align=align, offset=offset)


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    # ---- classical closed forms
    seq_fixture("A000108", [catalan(n) for n in range(17)],
                note="Catalan numbers C(2n,n)/(n+1)")
    aer = []
    for n in range(17):
        aer += [catalan(n // 2) if n % 2 == 0 else 0]
    seq_fixture("A126120", aer, note="Catalan numbers interleaved with zeros")
    seq_fixture("A001764", [math.comb(3 * n, n) // (2 * n + 1) for n in range(14)],
                note="C(3n,n)/(2n+1)")
    seq_fixture("A001405", [math.comb(n, n // 2) for n in range(17)],
                note="central binomial C(n, floor(n/2))")
    seq_fixture("A001700", [math.comb(2 * n + 1, n + 1) for n in range(14)],
                note="C(2n+1, n+1)")
    seq_fixture("A000012", [1] * 16, note="all ones")
    seq_fixture("A033999", [(-1) ** n for n in range(16)], note="(-1)^n")
    seq_fixture("A168491", [(-1) ** n * catalan(n) for n in range(14)],
                note="signed Catalan numbers")
    seq_fixture("A151374", [2**n * catalan(n) for n in range(14)],
                note="2^n * Catalan(n)")
    for a, r in (("A069271", 2), ("A212072", 3), ("A234463", 4)):
        seq_fixture(a, [fuss_even(r, m) for m in range(13)],
                    note=f"generalized Fuss numbers C(2mr+r,m)*r/(2mr+r), r={r}")
    seq_fixture("A085614", [a085614(n) for n in range(13)],
                note="2^n (3n)!! / ((n+1)! n!!)")

    # ---- catalog entries with hand-entered canonical prefixes,
    #      cross-checked against the construction
    moments_fixture("A006318", mp_delta(2, 1, 0),
                    known=[1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098,
                           1037718, 5293446, 27297738],
                    note="large Schroeder numbers")
    moments_fixture("A001003", mp_delta(R(1, 2), 2, 0),
                    known=[1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049,
                           518859, 2646723],
                    note="little Schroeder numbers")
    moments_fixture("A005043", mp_delta(1, 1, -1),
                    known=[1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213],
                    note="Riordan numbers")
    moments_fixture("A001006", w_delta(1, 1),
                    known=[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511],
                    note="Motzkin numbers")
    moments_fixture("A005773", mp_delta(1, -1, 3),
                    known=[1, 1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303,
                           49721],
                    note="directed animals etc.")
    moments_fixture("A007317", mp_delta(1, 1, 1),
                    known=[1, 1, 2, 5, 15, 51, 188, 731, 2950, 12235, 51822,
                           223191, 974427],
                    note="binomial transform of Catalan numbers")
    moments_fixture("A000957", mp_delta(R(1, 4), 2, R(-1, 2)),
                    known=[1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724,
                           91144],
                    note="Fine numbers")
    moments_fixture("A002212", w_delta(1, 3),
                    known=[1, 1, 3, 10, 36, 137, 543, 2219, 9285, 39587,
                           171369, 751236],
                    note="restricted hexagonal polyominoes")
    moments_fixture("A005572", w_delta(1, 4),
                    known=[1, 4, 17, 76, 354, 1704, 8421, 42508, 218318,
                           1137400, 5996938, 31940792, 171605956],
                    note="walks on the cubic lattice")

    # ---- sequences defined by their generating F (terms generated here)
    moments_fixture("A109081", ([1, -2, 1], [1, -1, 1]),
                    note="moments for the cumulant sequence r_n = n",
                    paper_prefix=[1, 1, 3, 10, 37, 146, 602, 2563, 11181,
                                  49720, 224540])
    moments_fixture("A078623", ([1, -1], [1, -1, 2, -1]),
                    note="moments of MP(1,1) plus semicircle shifted by -1",
                    paper_prefix=[1, 0])
    moments_fixture("A048779", ([R(c) for c in sympy.Poly((1 - w) * (1 - 2 * w + 2 * w**2), w).all_coeffs()[::-1]], [1]),
                    note="moments of w(1-w)(1-2w+2w^2)")
    # signed MP + MP combination at (u,v,x) = (-1,2,0)
    a_, b_ = R(1, 3), R(2, 3)
    moments_fixture("A250886",
                    from_r_expr(a_ * (-1) * w / (1 + w) + b_ * 2 * w / (1 - 2 * w)),
                    note="moments of MP(-1,1/3) boxplus MP(2,2/3)")
    moments_fixture("A106228", ([1], [R(c) for c in sympy.Poly((1 + w) * (1 + w + w**2), w).all_coeffs()[::-1]]),
                    note="moments of w/((1+w)(1+w+w^2))")
    moments_fixture("A003168", ([1], [R(c) for c in sympy.Poly((1 + w) ** 2 * (1 + 2 * w), w).all_coeffs()[::-1]]),
                    note="moments of w/((1+w)^2(1+2w))")
    moments_fixture("A120984", ([1], [1, 0, 3, 1]),
                    note="moments of w/(1+3w^2+w^3)")
    moments_fixture("A242566", compose_f(([1], [1, 0, 1]), ([1, -1], [1, 0])),
                    note="moments of MP(1,1) then semicircle composition")
    moments_fixture("A007852", compose_f(([1], [1, 0, 1]), ([1], [1, 0, 1])),
                    note="even moments of the double semicircle composition",
                    evens_only=True, n=12,
                    paper_prefix=[1])
    moments_fixture("A027307", ([1, 0, -1], [1, 0, 1]),
                    note="even moments of the symmetric MP pair at power 2",
                    evens_only=True, n=12)
    moments_fixture("A219535", ([1, 0, -1], [1, 0, 2]),
                    note="even moments of the symmetric MP pair at power 3",
                    evens_only=True, n=12)

    # ---- coefficient triangles (brute-force descent statistics)
    rows = eulerian_rows(8)
    flat, lens = [], []
    for k, row in enumerate(rows):
        full = [1] if k == 0 else [0] + row
        flat += full
        lens.append(len(full))
    FIXTURES.append({"a_number": "A123125", "offset": 0,
                     "terms": [str(t) for t in flat],
                     "align": 0, "row_lengths": lens,
                     "note": "descent-count triangle over all permutations; "
                             "row n>=1 is [0, counts by 0..n-1 descents]",
                     "source": "bundled"})
    rows = conger_rows(8)
    flat, lens = [], []
    for row in rows:
        flat += row
        lens.append(len(row))
    FIXTURES.append({"a_number": "A120434", "offset": 0,
                     "terms": [str(t) for t in flat],
                     "align": 0, "row_lengths": lens,
                     "note": "row k: permutations of k+2 starting with 2, "
                             "counted by descents-1 = 0..k-1",
                     "source": "bundled"})

    for fx in FIXTURES:
        assert len(fx["terms"]) >= 12, (fx["a_number"], len(fx["terms"]))
        path = OUT / f"{fx['a_number']}.json"
        path.write_text(json.dumps(fx, indent=1) + "\n")
    print(f"wrote {len(FIXTURES)} fixtures to {OUT}")


if __name__ == "__main__":
    sys.exit(main())
