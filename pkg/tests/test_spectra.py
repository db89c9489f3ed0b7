import random
from fractions import Fraction as F

import pytest

from conftest import rand_classf, rand_rat
from fcl.classf import (from_r, free_power, identity_f, make_classf,
                        make_ratfun, translate)
from fcl.exactalg import (AlgebraicReal, BiPoly, Poly, isolate_real_roots,
                          iv_poly_eval, poly_gcd, resultant_w)
from fcl.spectra import (Verdict, boundary_diagnostics, cg_region, char_poly,
                         char_poly_t, cleaned_critical_eliminant,
                         critical_ts, deg3_rr0, is_rr, is_rr0, is_singular,
                         lb_curve, moving_part, n_set, r3_poly_rr0,
                         r4_c0_classify, r4_singular_params,
                         rr0_at_algebraic_t)

w = Poly.x()


def f_of(p, q=None):
    return make_classf(p, q if q is not None else Poly.one())


# --------------------------------------------------------------- char poly


def test_char_poly_examples():
    assert char_poly(f_of(Poly([1, -1]) * Poly([1, -2, 2]))) == (1 - 2 * w) ** 3
    v, t = F(3), F(7)
    fmp = make_classf(Poly([1, -v]), Poly([1, -v + t * v]))
    assert char_poly(fmp) == Poly([1, -2 * v, (1 - t) * v**2])
    assert char_poly(identity_f()) == Poly.one()
    assert char_poly(f_of(Poly([1, -1]))) == Poly([1, -2])


def test_char_poly_translation_dilation(rng):
    for _ in range(15):
        f = rand_classf(rng, 3)
        u, c = rand_rat(rng), rand_rat(rng, nonzero=True)
        assert char_poly(translate(f, u)) == char_poly(f)
        assert char_poly(dilate_local(f, c)) == char_poly(f).scale_arg(c)


def dilate_local(f, c):
    from fcl.classf import dilate
    return dilate(f, c)


def test_char_poly_t_examples():
    fd = f_of(Poly([1, 0, -1]))
    assert char_poly_t(fd) == BiPoly([Poly([1]), Poly([0]), Poly([-2, -1]),
                                      Poly([0]), Poly([1, -1])])
    fa = make_classf(Poly([1, -1]), Poly([1, -1, 2, -1]))
    assert char_poly_t(fa) == BiPoly([Poly([1]), Poly([-2]), Poly([1, -2]),
                                      Poly([0, 2]), Poly([0, -1])])


def test_char_poly_t_specialization(rng):
    for _ in range(100):
        f = rand_classf(rng, 3)
        t = rand_rat(rng, 7, 3)
        specialized = char_poly_t(f).eval_param(t)
        if t != 0:
            assert specialized == char_poly(free_power(f, t))
        else:
            # the flow collapses to the identity; chi_0 = P^2 covers it
            assert specialized == f.P * f.P
            assert char_poly(free_power(f, 0)) == Poly.one()


# ------------------------------------------------------------- memberships


def test_is_rr0_examples():
    assert is_rr0(f_of(Poly([1, -1]) * Poly([1, -2, 2])))
    assert not is_rr0(f_of(Poly([1, -1]) * Poly([1, -1, 1])))
    assert is_rr0(make_classf(Poly.one(), Poly([1, 0, 3, 1])))
    assert char_poly(make_classf(Poly.one(), Poly([1, 0, 3, 1]))) == \
        Poly([1, 1]) ** 2 * Poly([1, -2])


def test_n_set_examples():
    ns = n_set(f_of(Poly([1, -1])))
    assert [r.as_fraction() for r in ns.real_members] == [F(1, 4)]
    assert ns.nonreal_pair_count == 0

    ns2 = n_set(f_of(Poly([1, -1]) * Poly([1, -1, 1])))
    assert [r.as_fraction() for r in ns2.real_members] == [F(3, 16), F(1, 4)]
    assert ns2.nonreal_pair_count == 0 and ns2.all_real

    f2 = free_power(f_of(Poly([1, 0, -1])), 2)
    ns3 = n_set(f2)
    assert ns3.nonreal_pair_count >= 1


def test_n_set_artifact_cleaning():
    # semicircle: generic leading coefficient vanishes at z = 0 but z = 0
    # is not a genuine member
    t = F(4)
    fw = make_classf(Poly.one(), Poly([1, 0, t]))
    ns = n_set(fw)
    assert ns.nonreal_pair_count == 0
    vals = [r for r in ns.real_members]
    assert len(vals) == 2
    assert all(not r.equals_rational(0) for r in vals)
    # members are +-1/(2 sqrt(t)) = +-1/4
    assert [r.as_fraction() for r in vals] == [F(-1, 4), F(1, 4)]


def test_n_set_genuine_zero_member():
    # P with a double root puts z = 0 into the set; cleaning must keep it
    f = f_of((1 - w) ** 2)
    ns = n_set(f)
    assert any(r.equals_rational(0) for r in ns.real_members)


def test_n_set_member_certificates(rng):
    for _ in range(10):
        f = rand_classf(rng, 3)
        ns = n_set(f)
        for r in ns.real_members:
            q = r.as_fraction()
            pz_gcd_deg_pos = None
            if q is not None:
                pz = w * f.P - q * f.Q
                pz_gcd_deg_pos = not poly_gcd(pz, pz.derivative()).is_constant()
                assert pz_gcd_deg_pos
            else:
                # certified at interval precision: the raw eliminant
                # numerically vanishes on the isolating interval
                a = BiPoly.from_linear(w * f.P, -f.Q)
                raw = resultant_w(a, a.deriv_w())
                rr = r.refined_to(F(1, 2**140))
                enc = iv_poly_eval(raw.coeffs, rr.interval)
                assert enc.contains_zero() and enc.width < F(1, 2**64)


def test_is_rr_examples():
    assert is_rr(f_of(Poly([1, -1]) * Poly([1, -1, 1])))
    assert not is_rr(free_power(f_of(Poly([1, 0, -1])), 2))


def test_rr0_implies_rr(rng):
    hits = 0
    for _ in range(40):
        f = rand_classf(rng, 3)
        if is_rr0(f):
            hits += 1
            assert is_rr(f)
    assert hits >= 3  # corpus actually exercised


def test_is_singular_examples():
    assert is_singular(f_of(Poly([1, -1]) * Poly([1, -2, 2])))
    assert not is_singular(f_of(Poly([1, -1])))
    f1 = make_classf(Poly([1, 0, 1]), Poly([1, 0, 9]))
    assert char_poly(f1) == Poly([1, 0, -3]) ** 2
    assert is_singular(f1)
    # multiple complex root only: not singular
    fc = from_r(make_ratfun(Poly([0, 0, 2, 0, 1]), Poly.one()))
    chi = char_poly(fc)
    assert chi == Poly([1, 0, -2, 0, -3])  # chi = 1 - 2w^2 - 3w^4 squarefree
    assert not is_singular(fc)


def test_boundary_diagnostics():
    d = boundary_diagnostics(f_of(Poly([1, -1]) * Poly([1, -2, 2])))
    assert d["singular"] and d["chi_degree"] == 3


# ---------------------------------------------------------------- criticals


def test_criticals_rnn1():
    f = from_r(make_ratfun(w, (1 - w) ** 2))
    rep = critical_ts(f, 0, 10)
    assert [c.as_fraction() for c in rep.criticals] == [F(27, 8)]
    assert rep.kinds == ("multiple_root",)
    assert rep.rr0_verdicts == (Verdict.NO, Verdict.YES)
    chi = char_poly(free_power(f, F(27, 8)))
    assert chi == F(1, 4) * Poly([1, -1]) * Poly([1, -4]) * Poly([2, 1]) ** 2


def test_criticals_darkmatter():
    f = f_of(Poly([1, 0, -1]))
    rep = critical_ts(f, 0, 3)
    assert len(rep.criticals) == 1
    assert rep.criticals[0].as_fraction() == 1
    assert rep.kinds == ("degree_drop",)
    assert rep.rr0_verdicts == (Verdict.YES, Verdict.NO)


def test_criticals_a078623():
    f = make_classf(Poly([1, -1]), Poly([1, -1, 2, -1]))
    rep = critical_ts(f, 0, 1)
    assert any(c.as_fraction() == F(1, 8) for c in rep.criticals)
    chi = char_poly(free_power(f, F(1, 8)))
    assert chi == F(1, 8) * Poly([2, -1]) ** 2 * Poly([2, -2, -1])
    assert is_rr0(free_power(f, F(1, 10)))
    assert not is_rr0(free_power(f, F(1, 4)))


def test_criticals_trivial_f():
    rep = critical_ts(identity_f(), 0, 5)
    assert rep.criticals == ()
    assert rep.rr0_verdicts == (Verdict.YES,)


def test_multiple_root_criticals_certify(rng):
    # every multiple_root critical satisfies: the moving part at t0 has a
    # nonconstant gcd with its derivative (rational t0 checked exactly)
    f = make_classf(Poly([1, -1]), Poly([1, -1, 2, -1]))
    _, xh, _ = cleaned_critical_eliminant(f)
    rep = critical_ts(f, 0, 1)
    for c, kind in zip(rep.criticals, rep.kinds):
        if kind in ("multiple_root", "both") and c.as_fraction() is not None:
            pt = xh.eval_param(c.as_fraction())
            assert not poly_gcd(pt, pt.derivative()).is_constant()


# ------------------------------------------------- algebraic rr0 verdicts


def test_rr0_at_rational_consistency(rng):
    f = f_of(Poly([1, 0, -1]))
    for t0 in (F(1, 2), F(1), F(2), F(7, 3)):
        expect = Verdict.YES if is_rr0(free_power(f, t0)) else Verdict.NO
        assert rr0_at_algebraic_t(f, t0) is expect
        assert rr0_at_algebraic_t(f, AlgebraicReal.from_rational(t0)) is expect


def test_rr0_at_algebraic_noncritical():
    f = f_of(Poly([1, 0, -1]))
    sqrt2 = isolate_real_roots(Poly([-2, 0, 1]))[1]
    assert rr0_at_algebraic_t(f, sqrt2) is Verdict.NO
    sqrt_half = isolate_real_roots(Poly([-1, 0, 2]))[1]
    assert rr0_at_algebraic_t(f, sqrt_half) is Verdict.YES


def test_rr0_at_algebraic_critical_euler2():
    from fcl.euler import nk_classf
    f = nk_classf(2)
    rep = critical_ts(f, 0, 10)
    assert len(rep.criticals) == 1
    t0 = rep.criticals[0]
    assert abs(float(t0) - 6.49104) < 1e-4
    assert rr0_at_algebraic_t(f, t0) is Verdict.YES


# ------------------------------------------------------------ region tests


def test_deg3_closed_form_examples():
    assert deg3_rr0(0, 0, 0)
    assert deg3_rr0(4, 5, 2)          # w(1+w)^2(1+2w)
    assert is_rr0(f_of(Poly([1, 4, 5, 2])))


def test_deg3_matches_sturm(rng):
    for _ in range(200):
        a, b = rand_rat(rng, 5, 3), rand_rat(rng, 5, 3)
        c = rand_rat(rng, 5, 3, nonzero=True)
        assert deg3_rr0(a, b, c) == is_rr0(f_of(Poly([1, a, b, c])))


def test_r3_poly_examples():
    assert r3_poly_rr0(3, 1)
    assert not r3_poly_rr0(1, 1)
    assert r3_poly_rr0(2, 0)
    with pytest.raises(ValueError):
        r3_poly_rr0(0, 1)


def test_r3_poly_matches_rr0(rng):
    for _ in range(40):
        b = abs(rand_rat(rng, 5, 3, nonzero=True))
        c = rand_rat(rng, 5, 3)
        u = rand_rat(rng, 5, 3)
        f = from_r(make_ratfun(Poly([0, u, b, c]), Poly.one()))
        assert r3_poly_rr0(b, c) == is_rr0(f)


def test_r4_singular_params():
    assert r4_singular_params(1, 0) == (0, 0)
    assert r4_singular_params(1, F(1, 2)) == (F(1, 4), F(1, 48))
    b, v = F(1), F(1)
    c, d = r4_singular_params(b, v)
    assert (c, d) == (-1, F(-2, 3))
    f = from_r(make_ratfun(Poly([0, 0, b, c, d]), Poly.one()))
    assert is_singular(f)
    assert is_rr0(f) == (2 * v**2 <= b)
    # claimed factorization of chi
    assert char_poly(f) == Poly([1, v]) ** 2 * Poly([1, -2 * v, 3 * v**2 - b])


def test_r4_singular_random(rng):
    for _ in range(25):
        b = abs(rand_rat(rng, 4, 2, nonzero=True))
        v = rand_rat(rng, 3, 2)
        c, d = r4_singular_params(b, v)
        f = from_r(make_ratfun(Poly([0, 0, b, c, d]), Poly.one()))
        assert char_poly(f) == Poly([1, v]) ** 2 * Poly([1, -2 * v, 3 * v**2 - b])
        # at v = 0 the squared factor is trivial and F is the plain semicircle
        assert is_singular(f) == (v != 0)
        assert is_rr0(f) == (2 * v**2 <= b)


def test_r4_c0_classify():
    assert r4_c0_classify(1, F(1, 4)) == \
        {"in_dist": True, "in_rr0": False, "on_rr_balloon_top": True}
    assert r4_c0_classify(1, F(-1, 12)) == \
        {"in_dist": True, "in_rr0": True, "on_rr_balloon_top": False}
    assert r4_c0_classify(1, 1) == \
        {"in_dist": False, "in_rr0": False, "on_rr_balloon_top": False}
    with pytest.raises(ValueError):
        r4_c0_classify(-1, 0)


def test_r4_c0_rr0_matches_sturm(rng):
    for _ in range(30):
        b = abs(rand_rat(rng, 4, 2, nonzero=True))
        d = rand_rat(rng, 4, 3)
        f = from_r(make_ratfun(Poly([0, 0, b, 0, d]), Poly.one()))
        assert r4_c0_classify(b, d)["in_rr0"] == is_rr0(f)


def test_r4_balloon_top_is_rr_not_rr0():
    b = F(2)
    d = b**2 / 4
    f = from_r(make_ratfun(Poly([0, 0, b, 0, d]), Poly.one()))
    assert not is_rr0(f)
    assert is_rr(f)


def test_lb_curve():
    pts = lb_curve(1, 9)
    assert len(pts) == 9
    assert pts[4] == (0, 0)                      # v = 0 sample
    assert pts[0][0] == -pts[-1][0]              # c odd in v
    assert pts[0][1] == pts[-1][1]               # d even in v
    for c, d in pts:
        f = from_r(make_ratfun(Poly([0, 0, 1, c, d]), Poly.one()))
        assert is_singular(f) == ((c, d) != (0, 0))
    with pytest.raises(ValueError):
        lb_curve(-1, 5)
    with pytest.raises(ValueError):
        lb_curve(1, 1)


def test_cg_region_anchors():
    assert cg_region(0, F(1, 4))
    assert cg_region(0, F(-1, 12))
    assert not cg_region(0, F(1, 3))
    assert cg_region(0, F(1, 36))
    assert not cg_region(1, F(1, 4))
    assert not cg_region(0, F(-1, 11))


def test_cg_region_symmetry(rng):
    for _ in range(100):
        x, y = rand_rat(rng, 2, 6), rand_rat(rng, 2, 6)
        assert cg_region(x, y) == cg_region(-x, y)


def test_cg_region_deg3_consistency(rng):
    # inside the body with k4 = 0 it degenerates to the cubic criterion
    for _ in range(25):
        x = rand_rat(rng, 2, 8)
        f = from_r(make_ratfun(Poly([0, 0, 1, x]), Poly.one()))
        assert cg_region(x, 0) == is_rr0(f)
