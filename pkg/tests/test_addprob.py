import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from critline.addprob import (PhiKernel, SingularSeriesParams, brute_s, brute_s_by_n2,
                              eps_q, lemma13_check, m_closed, mellin_numeric, phi,
                              phi_quad, q_class, r_coeff_array, sigma, sigma_table,
                              z_closed, z_direct)
from critline.arith import tau
from critline.dirchar import DiscriminantSplit, PoleError


def test_r_coeff_array_matches_divisor_sum(trivial15):
    from critline.quadfield import chi_d_divisor_sum

    assert np.array_equal(r_coeff_array(trivial15, 1000),
                          chi_d_divisor_sum(-15, 1000))


def test_eps_q_at_one(genus15, trivial15):
    p = SingularSeriesParams(1, 1, 1, trivial15)
    assert eps_q(p, 1) == 1.0  # trivial split: the empty bracket product is 1
    p2 = SingularSeriesParams(1, 1, 1, genus15)
    assert eps_q(p2, 1) == 0.0  # q = 1 lies outside all four classes here


def test_eps_q_vanishes_off_classes(genus15):
    p = SingularSeriesParams(1, 1, 1, genus15)
    checked = 0
    for q in range(1, 400):
        if q_class(p, q) is None:
            assert abs(eps_q(p, q)) < 1e-10, q
            checked += 1
    assert checked > 200


def test_eps_q_ramanujan_bound(genus15):
    p = SingularSeriesParams(1, 1, 1, genus15)
    big_d = 15
    for q in range(1, 1000):
        e = abs(eps_q(p, q))
        assert e <= 2.0 * math.sqrt(big_d) * tau(q) * math.sqrt(q) * math.sqrt(math.gcd(1, q)) + 1e-9


def test_sigma_real_and_matches_z_limit(genus15, trivial15, trivial23):
    for sp, expect in ((trivial15, 1 / (2 * math.pi**2)),
                       (genus15, -1 / (4 * math.pi**2)),
                       (trivial23, 1 / (4 * math.pi**2))):
        p = SingularSeriesParams(1, 1, 1, sp)
        val, bound = sigma(p, q_max=6000)
        assert abs(val - expect) < 3e-6
        assert bound > 0


def test_sigma_budget_unreachable(genus15):
    p = SingularSeriesParams(1, 1, 1, genus15)
    with pytest.raises(ArithmeticError):
        sigma(p, q_max=1000, budget=1e-12)


def test_sigma_table_matches_pointwise(genus15):
    table = sigma_table(genus15, 1, 1, 12, q_max=3000)
    for l in (1, 2, 3, 7, 12):
        p = SingularSeriesParams(l, 1, 1, genus15)
        val, _ = sigma(p, q_max=3000)
        assert table[l] == pytest.approx(val, abs=1e-12)


def test_brute_s_examples(trivial15):
    p = SingularSeriesParams(1, 1, 1, trivial15)
    r = r_coeff_array(trivial15, 10)
    assert brute_s(p, 2) == r[2] * r[1]


@given(st.integers(1, 6), st.integers(1, 4), st.integers(1, 4), st.integers(10, 400))
@settings(max_examples=40, deadline=None)
def test_brute_s_dual_loops(l, m1, m2, n):
    if math.gcd(m1, m2) != 1:
        return
    sp = DiscriminantSplit(-3, 5)
    p = SingularSeriesParams(l, m1, m2, sp)
    assert brute_s(p, n) == brute_s_by_n2(p, n)


def test_lemma13_ratio_anchor(genus15):
    p = SingularSeriesParams(1, 1, 1, genus15)
    rep = lemma13_check(p, [10**4, 10**5], 2, q_max=6000)
    assert abs(rep["rows"][-1]["ratio"] - 1.0) < 0.05
    assert rep["rows"][0]["residual_scaled"] >= rep["rows"][1]["residual_scaled"]


def test_lemma13_m2_scaling_of_main_term(genus15):
    # doubling m2 halves the main term by construction
    p1 = SingularSeriesParams(1, 1, 1, genus15)
    sig, _ = sigma(p1, q_max=2000)
    main1 = sig * math.pi**2 * 4 * 1000 / 1
    main2 = sig * math.pi**2 * 4 * 1000 / 2
    assert main2 == pytest.approx(main1 / 2)


def test_lemma13_requires_coprime_shift(genus15):
    p = SingularSeriesParams(3, 3, 1, genus15)
    with pytest.raises(ValueError):
        lemma13_check(p, [100], 2)


def test_z_direct_stability(genus15):
    a, bound_a = z_direct(genus15, 1, 1, 2.0, l_max=800, q_max=4000)
    b, bound_b = z_direct(genus15, 1, 1, 2.0, l_max=1600, q_max=4000)
    assert abs(a - b) <= bound_a + 1e-9
    assert bound_b < bound_a


def test_z_direct_domain(genus15):
    with pytest.raises(ValueError):
        z_direct(genus15, 1, 1, 1.2)


def test_z_closed_matches_direct(genus15):
    for (m1, m2) in ((1, 1), (5, 3), (3, 5)):
        zd, _ = z_direct(genus15, m1, m2, 2.0, l_max=1500, q_max=6000)
        zc = z_closed(genus15, m1, m2, 2.0)
        assert abs(zd - zc) < 1e-3
    zd, _ = z_direct(genus15, 1, 1, 1.7 + 0.3j, l_max=1500, q_max=6000)
    zc = z_closed(genus15, 1, 1, 1.7 + 0.3j)
    assert abs(zd - zc) < 1e-3


def test_z_closed_trivial_split_cross_terms_vanish(trivial15):
    # d1 = 1: the cross gates need |d2| = 15 dividing m_j; both fail here,
    # leaving the two zeta-weighted diagonal terms only
    val = z_closed(trivial15, 1, 2, 2.0)
    zd, _ = z_direct(trivial15, 1, 2, 2.0, l_max=1500, q_max=6000)
    assert abs(val - zd) < 1e-3


def test_z_closed_poles(trivial15, genus15):
    with pytest.raises(PoleError):
        z_closed(trivial15, 1, 1, 1.0)
    with pytest.raises(PoleError):
        z_closed(genus15, 1, 1, 0.0)
    # no pole at s = 1 for a nontrivial split
    assert math.isfinite(abs(z_closed(genus15, 1, 1, 1.0)))


def test_phi_properties():
    K = PhiKernel(0.3, 0.1)
    assert phi(K, 1.0) == 1.0
    assert phi(K, 0.0) == 0.0
    vals = [phi(K, u) for u in np.linspace(0.0, 8.0, 200)]
    assert all(b >= a - 1e-15 for a, b in zip(vals, vals[1:]))
    assert max(vals) <= 1.0 + K.cap_delta ** -4.0
    with pytest.raises(ValueError):
        PhiKernel(0.6, 0.1)
    assert 0.87 < PhiKernel(0.5, 0.0).cap_delta < 1.0


def test_phi_quad_domains():
    K = PhiKernel(0.01, 0.1)
    with pytest.raises(ValueError):
        phi_quad(K, 5.5, 1.0)
    with pytest.raises(ValueError):
        phi_quad(K, 0.5, 0.0)  # y = 0 needs Re s > 1
    assert math.isfinite(abs(phi_quad(K, 1.1, 0.0)))


def test_phi_quad_against_mpmath():
    import mpmath as mp

    mp.mp.dps = 20
    K = PhiKernel(0.01, 0.1)
    d4 = mp.cos(mp.mpf("0.01")) ** 4
    for v in (0.2, 1.5):
        ref = mp.quadosc(lambda u: (1 + d4) / (d4 + u**-4) * u ** (-mp.mpf("1.1"))
                         * mp.cos(2 * mp.pi * v * u), [0, mp.inf], period=1 / mp.mpf(v))
        mine = phi_quad(K, 1.1, v)
        assert abs(mine.real - float(ref)) <= 1e-10 * abs(float(ref))


def test_m_closed_domain():
    K = PhiKernel(0.01, 0.1)
    with pytest.raises(ValueError):
        m_closed(K, 2.5)
    assert math.isfinite(abs(m_closed(K, 0.8 + 1.0j)))


def test_mellin_pair():
    K = PhiKernel(0.01, 0.1)
    w = 1.5 + 0j
    assert abs(m_closed(K, w) - mellin_numeric(K, w)) < 1e-6 * abs(m_closed(K, w))
