from fractions import Fraction as F

import pytest

from conftest import rand_classf, rand_rat
from fcl.classf import dilate, from_r, make_classf, make_ratfun, moments
from fcl.exactalg import Poly, hankel_det
from fcl.posdef import fid_check, hankel_verdict, is_moment_positive_up_to

w = Poly.x()


def test_hankel_verdict_counterexample_1():
    a109081 = [1, 1, 3, 10, 37, 146, 602, 2563, 11181, 49720, 224540]
    hv = hankel_verdict(a109081, 5)
    assert hv.is_negative and hv.order == 5 and hv.determinant == -3374
    assert hv.minors[:5] == (1, 2, 7, 38, 228)
    assert all(m >= 0 for m in hv.minors[:-1])


def test_hankel_verdict_counterexample_2():
    f = from_r(make_ratfun(w * (1 + w), (1 - w) ** 3))
    m = moments(f, 10)
    assert list(m.terms) == [1, 1, 5, 22, 109, 576, 3174, 18047, 105093,
                             623608, 3757124]
    hv = hankel_verdict(m, 4)
    assert hv.is_negative and hv.order == 4 and hv.determinant == -685964


def test_hankel_verdict_positive():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    hv = hankel_verdict(catalan, 5)
    assert not hv.is_negative
    assert hv.minors == (1,) * 6


def test_hankel_verdict_insufficient_terms():
    with pytest.raises(ValueError):
        hankel_verdict([1, 2, 3], 2)


def test_zero_minor_does_not_stop_scan():
    # minor0 = 1, minor1 = 0, minor2 = -1: the zero must not end the scan
    s = [1, 0, 0, -1, 0]
    hv = hankel_verdict(s, 2)
    assert hv.is_negative and hv.order == 2
    assert hv.minors == (1, 0, -1)


def test_is_moment_positive_examples():
    f = make_classf(Poly([1, -1]) * Poly([1, -1, 1]), Poly.one())
    assert not is_moment_positive_up_to(f, 6).is_negative

    f2 = from_r(make_ratfun(Poly([0, 2, 2, 1]), Poly.one()))  # A106228
    hv = is_moment_positive_up_to(f2, 5)
    assert hv.is_negative and hv.order == 5 and hv.determinant == -3374

    from fcl.classf import identity_f
    hv3 = is_moment_positive_up_to(identity_f(), 6)
    assert not hv3.is_negative
    assert hv3.minors == (1, 0, 0, 0, 0, 0, 0)


def test_fid_check_families():
    from fcl.distlib import mp, wigner
    v, t = F(3, 2), F(5)
    hv = fid_check(mp(v, t), 6)
    assert not hv.is_negative
    assert hv.minors[0] == t * v**2 and all(m == 0 for m in hv.minors[1:])
    hv2 = fid_check(wigner(t), 5)
    assert not hv2.is_negative
    assert hv2.minors[0] == t and all(m == 0 for m in hv2.minors[1:])


def test_fid_check_non_fid():
    # P has non-real roots, so the law cannot be freely infinitely divisible
    f = make_classf(Poly([1, -1]) * Poly([1, -2, 2]), Poly.one())
    hv = fid_check(f, 12)
    assert hv.is_negative and hv.order <= 12


def test_dilation_minor_scaling(rng):
    # order-k minor scales by c^(k(k+1)) under dilation
    for _ in range(8):
        f = rand_classf(rng, 3)
        c = rand_rat(rng, 4, 2, nonzero=True)
        m1 = moments(f, 8).terms
        m2 = moments(dilate(f, c), 8).terms
        for k in range(5):
            assert hankel_det(m2, k) == c ** (k * (k + 1)) * hankel_det(m1, k)
