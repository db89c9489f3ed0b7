import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rand_classf
from fcl.classf import (ClassF, RatFun, SeriesPrefix, boxplus, compose,
                        cumulants, dilate, free_power, from_r, identity_f,
                        make_classf, make_ratfun, moments, r_transform,
                        translate)
from fcl.errors import InvalidRTransform, NotInClass
from fcl.exactalg import Poly
from fcl.series import ser_compose, ser_trunc

w = Poly.x()

small_rat = st.fractions(min_value=F(-5), max_value=F(5), max_denominator=4)


# ------------------------------------------------------------ construction


def test_make_classf_normalization():
    f = make_classf(Poly([1, -1]), Poly.one())
    assert f == ClassF(Poly([1, -1]), Poly.one())
    assert make_classf(Poly([2, -2]), Poly([2])) == f
    assert make_classf(Poly([1, -1]) * Poly([1, 1]), Poly([1, 1])) == f


def test_make_classf_errors():
    with pytest.raises(NotInClass):
        make_classf(Poly([0, 1]), Poly.one())
    with pytest.raises(NotInClass):
        make_classf(Poly.one(), Poly([0, 1]))
    with pytest.raises(NotInClass):
        make_classf(Poly([2, 1]), Poly([3, 1]))  # F'(0) = 2/3


def test_series_prefix_invariants():
    with pytest.raises(ValueError):
        SeriesPrefix((2, 1), "moments")
    with pytest.raises(ValueError):
        SeriesPrefix((1, 1), "cumulants")
    assert SeriesPrefix((1, 2, 3), "moments")[2] == 3


# ------------------------------------------------------------- r-transform


def test_r_transform_examples():
    v, t = F(2), F(3)
    f = make_classf(Poly([1, -v]), Poly([1, -v + t * v]))
    assert r_transform(f) == make_ratfun(Poly([0, t * v]), Poly([1, -v]))
    assert r_transform(identity_f()) == RatFun(Poly.zero(), Poly.one())
    fw = make_classf(Poly.one(), Poly([1, 0, t]))
    assert r_transform(fw) == RatFun(Poly([0, 0, t]), Poly.one())


def test_from_r_examples():
    r1 = make_ratfun(w, (1 - w) ** 2)
    assert from_r(r1) == ClassF((1 - w) ** 2, Poly([1, -1, 1]))
    assert from_r(RatFun(Poly.zero(), Poly.one())) == identity_f()
    r2 = make_ratfun(w * (1 + w), (1 - w) ** 3)
    assert from_r(r2) == ClassF((1 - w) ** 3, Poly([1, -2, 4, -1]))
    with pytest.raises(InvalidRTransform):
        from_r(RatFun(Poly.one(), Poly.one()))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_from_r_roundtrip(seed):
    f = rand_classf(random.Random(seed), 3)
    assert from_r(r_transform(f)) == f


# ------------------------------------------------- translation and dilation


def test_translate_dilate_examples():
    u = F(5, 2)
    assert translate(identity_f(), u) == ClassF(Poly.one(), Poly([1, u]))
    f = rand_classf(random.Random(3), 3)
    assert translate(f, 0) == f
    assert dilate(make_classf(Poly([1, -1]), Poly.one()), -1) == \
        make_classf(Poly([1, 1]), Poly.one())
    assert dilate(f, 1) == f
    with pytest.raises(ValueError):
        dilate(f, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), small_rat, small_rat)
def test_translate_dilate_r_identities(seed, u, c):
    f = rand_classf(random.Random(seed), 3)
    rf = r_transform(f)
    r1 = r_transform(translate(f, u))
    assert r1 - rf == RatFun(Poly([0, u]), Poly.one())
    if c != 0:
        r2 = r_transform(dilate(f, c))
        assert r2 == make_ratfun(rf.num.scale_arg(c), rf.den.scale_arg(c))


# ------------------------------------------------------- group operations


def test_boxplus_examples():
    f = rand_classf(random.Random(11), 4)
    assert boxplus(f, identity_f()) == f
    mp_pos = make_classf(Poly([1, -1]), Poly([1, F(-1, 2)]))   # MP(1, 1/2)
    mp_neg = make_classf(Poly([1, 1]), Poly([1, F(1, 2)]))     # MP(-1, 1/2)
    assert boxplus(mp_pos, mp_neg) == ClassF(Poly([1, 0, -1]), Poly.one())


def test_free_power_examples():
    fd = make_classf(Poly([1, 0, -1]), Poly.one())
    t = F(7, 2)
    assert free_power(fd, t) == ClassF(Poly([1, 0, -1]), Poly([1, 0, t - 1]))
    f = rand_classf(random.Random(5), 4)
    assert free_power(f, 1) == f
    assert free_power(f, 0) == identity_f()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), small_rat, small_rat)
def test_group_laws(seed, s, t):
    rng = random.Random(seed)
    f1, f2, f3 = (rand_classf(rng, 3) for _ in range(3))
    assert boxplus(f1, f2) == boxplus(f2, f1)
    assert boxplus(boxplus(f1, f2), f3) == boxplus(f1, boxplus(f2, f3))
    assert r_transform(boxplus(f1, f2)) == r_transform(f1) + r_transform(f2)
    assert free_power(f1, s + t) == boxplus(free_power(f1, s), free_power(f1, t))
    assert free_power(free_power(f1, s), t) == free_power(f1, s * t)


# ------------------------------------------------------------- composition


def test_compose_examples():
    u, v = F(2), F(-3)
    g = compose(make_classf(Poly([1, v]), Poly.one()),
                make_classf(Poly([1, u]), Poly.one()))
    assert g == make_classf(Poly([1, u]) * Poly([1, v, u * v]), Poly.one())
    f = rand_classf(random.Random(17), 4)
    assert compose(identity_f(), f) == f
    assert compose(f, identity_f()) == f


def test_compose_monotone_paper_form():
    # semicircle into MP: F_MP(F_W(w)) with rationalized parameters
    v, s, t = F(3), F(4), F(1)
    fw = make_classf(Poly.one(), Poly([1, 0, t]))
    fmp = make_classf(Poly([1, -v]), Poly([1, -v + s * v]))
    got = compose(fmp, fw)
    expect = make_classf(Poly([1, -v, t]),
                         Poly([1, 0, t]) * Poly([1, -v + s * v, t]))
    assert got == expect


def test_compose_d_series(rng):
    # D series of the composition is D1(D2(z)) order by order
    for _ in range(5):
        f1, f2 = rand_classf(rng, 3), rand_classf(rng, 3)
        n = 15
        g = compose(f2, f1)
        mg = moments(g, n)
        d1 = [F(0)] + list(moments(f1, n).terms)
        d2 = [F(0)] + list(moments(f2, n).terms)
        comp = ser_compose(ser_trunc(d1, n + 1), ser_trunc(d2, n + 1), n + 1)
        assert comp[1:] == list(mg.terms)


# ----------------------------------------------------------------- moments


def test_moments_catalan():
    f = make_classf(Poly([1, -1]), Poly.one())
    assert list(moments(f, 5).terms) == [1, 1, 2, 5, 14, 42]


def test_moments_rnn1():
    f = from_r(make_ratfun(w, (1 - w) ** 2))
    assert list(moments(f, 10).terms) == \
        [1, 1, 3, 10, 37, 146, 602, 2563, 11181, 49720, 224540]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_first_moments_formulas(seed):
    f = rand_classf(random.Random(seed), 4)
    a1, a2 = f.P.coeff(1), f.P.coeff(2)
    b1, b2 = f.Q.coeff(1), f.Q.coeff(2)
    s = moments(f, 2).terms
    assert s[0] == 1
    assert s[1] == b1 - a1
    assert s[2] == 2 * a1**2 + b1**2 - 3 * a1 * b1 - a2 + b2
    # variance identity
    assert s[2] - s[1] ** 2 == a1**2 - a1 * b1 - a2 + b2


def test_moments_dual_route_agreement(rng):
    # the two extraction routes agree to n = 25 on 50 random members
    for _ in range(50):
        f = rand_classf(rng, 4)
        m = moments(f, 25)
        assert len(m.terms) == 26 and m.terms[0] == 1


# --------------------------------------------------------------- cumulants


def test_cumulants_examples():
    v, t = F(3, 2), F(5)
    fm = make_classf(Poly([1, -v]), Poly([1, -v + t * v]))
    assert list(cumulants(fm, 6).terms) == [0] + [t * v**n for n in range(1, 7)]
    assert list(cumulants(identity_f(), 5).terms) == [0] * 6
    f = from_r(make_ratfun(w, (1 - w) ** 2))
    assert list(cumulants(f, 9).terms) == [0, 1, 2, 3, 4, 5, 6, 7, 8, 9]
    with pytest.raises(ValueError):
        cumulants(f, 0)
