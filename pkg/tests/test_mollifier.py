import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from critline.arith import sieve_primes, tau
from critline.dirchar import DiscriminantSplit
from critline.lseries import lseries_from_character, lseries_from_split
from critline.mollifier import (MollifierTable, alpha_prime_powers,
                                alpha_prime_powers_closed, alpha_table,
                                alpha_table_from_lseries, b_helpers, g_kernel,
                                j_estimate, mollified_coeffs, mollified_coeffs_triple,
                                r_int_table, smoothing_weights, window_integrals)
from critline.quadfield import class_group


def test_alpha_basics(genus15):
    M = alpha_table(genus15, 100.0)
    assert M.alpha[1] == 1
    r = r_int_table(genus15, 100)
    for p in (2, 7, 11, 13):
        if 15 % p == 0:
            continue
        assert M.alpha[p] == Fraction(-r[p], 2)


def test_alpha_inert_prime_powers(genus15):
    # chi_D(7) = -1 for D = 15
    a = alpha_prime_powers(genus15, 7, 8)
    assert a[2] == Fraction(-1, 2)
    assert a[3] == 0 and a[5] == 0 and a[7] == 0
    assert a[4] == Fraction(-1, 8)
    for k in (4, 6, 8):
        assert abs(a[k]) <= Fraction(1, 2 * k)


def test_alpha_closed_matches_binomial_all_splits():
    for d1, d2 in ((1, -15), (-3, 5), (1, -23), (-4, 5)):
        sp = DiscriminantSplit(d1, d2)
        for p in sieve_primes(200):
            if (-sp.disc) % p == 0:
                continue
            k = int(math.log(200) / math.log(p))
            assert alpha_prime_powers(sp, p, k) == alpha_prime_powers_closed(sp, p, k)


def test_alpha_from_lseries_matches_split(genus15):
    Ls = lseries_from_split(genus15)
    Mf = alpha_table_from_lseries(Ls, 60.0)
    Me = alpha_table(genus15, 60.0)
    for nu in range(1, 61):
        assert abs(Mf.alpha[nu] - float(Me.alpha[nu])) < 1e-12


def test_alpha_from_complex_hecke_character():
    G = class_group(-23)
    psi = G.characters()[1]
    L = lseries_from_character(G, psi)
    M = alpha_table_from_lseries(L, 50.0)
    assert M.alpha[1] == 1.0
    # alpha(p) = -r(p)/2 holds for any degree-2 Euler factor
    r = L.coeffs(50)
    for p in (2, 3, 5, 7):
        assert abs(M.alpha[p] + r[p - 1] / 2.0) < 1e-12


def test_smoothing_boundaries():
    X = 400.0
    w = smoothing_weights(X, 400)
    assert w[19] == 1.0  # below sqrt(X)
    assert abs(w[20] - 1.0) < 1e-15  # at sqrt(X) both branches give 1
    assert w[400] == 0.0
    assert w[150] == pytest.approx(2 * math.log(400 / 150) / math.log(400))


def test_beta_vanishes_beyond_x(genus15):
    M = alpha_table(genus15, 50.0)
    assert M.nu_max == 50
    assert all(M.beta[nu] == 0.0 or nu <= 50 for nu in range(1, 51))


def test_eta_trivial_when_x_small(genus15):
    M = alpha_table(genus15, 3.5)
    # only nu = 1 lies below sqrt(3.5); eta collapses to 1 + beta(2)/2^s + beta(3)/3^s
    # with the smoothing already cutting 2, 3 by the log weight
    val = M.eta(0.0)
    assert abs(val - sum(M.beta[1:])) < 1e-15
    assert M.beta[1] == 1.0


def test_eta_exact_rational_oracle(trivial15):
    M = alpha_table(trivial15, 100.0)
    s = 2
    oracle = Fraction(0)
    for nu in range(1, 101):
        oracle += M.beta_fraction(nu) / Fraction(nu) ** s
    assert abs(M.eta(2.0) - float(oracle)) < 1e-12


def test_mollified_vanishing_below_sqrt_x(genus15):
    M = alpha_table(genus15, 400.0)
    c = mollified_coeffs(genus15, M, 19)
    assert c[1] == 1
    assert all(c[n] == 0 for n in range(2, 20))


def test_mollified_dual_routes_exact(genus15):
    M = alpha_table(genus15, 400.0)
    a = mollified_coeffs(genus15, M, 25)
    b = mollified_coeffs_triple(genus15, M, 25)
    assert a == b  # exact rational equality, including c(25) above sqrt(X)


def test_mollified_requires_n_below_x(genus15):
    M = alpha_table(genus15, 30.0)
    with pytest.raises(ValueError):
        mollified_coeffs(genus15, M, 31)


def test_b_helpers(genus15):
    b1, B1 = b_helpers(genus15, 1)
    assert b1 == 1 and B1 == 1
    r = r_int_table(genus15, 1100)
    for p in sieve_primes(1000):
        b, B = b_helpers(genus15, p)
        assert b == abs(r[p])
        assert B == abs(r[p])
    for n in range(1, 2000):
        b, B = b_helpers(genus15, n)
        assert b <= tau(n)


@given(st.integers(2, 300), st.integers(2, 300))
@settings(max_examples=40, deadline=None)
def test_b_multiplicative(m, n):
    sp = DiscriminantSplit(-3, 5)
    if math.gcd(m, n) != 1:
        return
    assert b_helpers(sp, m * n)[0] == b_helpers(sp, m)[0] * b_helpers(sp, n)[0]
    assert b_helpers(sp, m * n)[1] == b_helpers(sp, m)[1] * b_helpers(sp, n)[1]


def test_g_kernel_nonnegative_and_collapse(genus15):
    L = lseries_from_split(genus15)
    assert g_kernel(L, None, 3.0, 50.0) >= 0.0
    M = alpha_table(genus15, 10.0)
    assert g_kernel(L, M, 1.0, 50.0) >= 0.0


def test_g_kernel_brute_force(genus15):
    L = lseries_from_split(genus15)
    M = alpha_table(genus15, 10.0)
    got = g_kernel(L, M, 2.0, 50.0, tail_eps=1e-22)
    delta = 1.0 / 50.0
    sd, cd = math.sin(delta), math.cos(delta)
    r = r_int_table(genus15, 120000)
    total = 0j
    for n1 in range(1, 11):
        for n2 in range(1, 11):
            w = M.beta[n1] * M.beta[n2] / n2
            if not w:
                continue
            mu = 2 * math.pi * n1 * 2.0 / (math.sqrt(15) * n2)
            for n in range(1, 120000):
                damp = mu * n * sd
                if damp > 55:
                    break
                if r[n]:
                    total += w * r[n] * np.exp(-mu * n * complex(sd, cd))
    assert got == pytest.approx(abs(total) ** 2, rel=1e-10)


def test_j_estimate_properties(genus15):
    L = lseries_from_split(genus15)
    rep = j_estimate(L, None, 0.5, 50.0)
    assert rep["J"] > 0 and math.isfinite(rep["ratio"])
    # integrand nonnegative: a shorter range can only lose mass
    rep_hi = j_estimate(L, None, 0.5, 50.0, U_max=rep["U_max"] / 4)
    assert rep_hi["J"] <= rep["J"] + 1e-9
    # stability under doubling the cutoff
    rep2 = j_estimate(L, None, 0.5, 50.0, U_max=rep["U_max"] * 2)
    assert abs(rep2["J"] - rep["J"]) < 0.01 * rep["J"]


def test_j_estimate_domain(genus15):
    L = lseries_from_split(genus15)
    with pytest.raises(ValueError):
        j_estimate(L, None, 1e-4, 50.0)


def test_window_integrals_shrink(genus15):
    L = lseries_from_split(genus15)
    out = window_integrals(L, None, 20.0, 1e-6, 100.0)
    assert abs(out["I"]) < 1e-4
    assert abs(out["M"] + 1e-6) < 1e-4  # M -> -H as the interval shrinks... H tiny


def test_window_integrals_mollifier_free_m(genus15):
    # with eta = 1 the M integral is the plain L integral minus H
    L = lseries_from_split(genus15)
    t, H = 14.0, 0.5
    out = window_integrals(L, None, t, H, 100.0)
    from critline.lseries import _gauss_adaptive

    direct = _gauss_adaptive(lambda u: L.l_value(complex(0.5, u)), t, t + H, 1e-8) - H
    assert abs(out["M"] - direct) < 1e-5 * max(1.0, abs(direct))


def test_window_integrals_conjugation(genus15):
    L = lseries_from_split(genus15)
    out_pos = window_integrals(L, None, 12.0, 1.0, 100.0)
    out_neg = window_integrals(L, None, -13.0, 1.0, 100.0)
    # Lambda(1/2 + iu) even in u up to conjugation; the I integrand differs
    # only through the exponential weight, M mirrors to the conjugate
    assert out_neg["M"] == pytest.approx(out_pos["M"].conjugate(), rel=1e-6, abs=1e-9)
