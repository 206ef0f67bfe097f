import math

import mpmath as mp
import numpy as np
import pytest

from critline.dirchar import DiscriminantSplit, PoleError, l_chi_d, splits
from critline.lseries import (EvalKnobs, epstein_direct_lattice, epstein_via_hecke,
                              hardy_reality_residual, hardy_z, lseries_from_character,
                              lseries_from_form, lseries_from_split, scan_zeros,
                              window_test)
from critline.quadfield import QuadForm, class_group
from critline import deg1

mp.mp.dps = 30


def _lambda_ref_disc4(s):
    """(pi)^{-s} Gamma(s) zeta(s) L(s, chi_-4) in high precision (D = 4)."""
    s = mp.mpc(s)
    L4 = mp.power(4, -s) * (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4))
    return complex(mp.power(mp.pi, -s) * mp.gamma(s) * mp.zeta(s) * L4)


def test_kappa_values():
    G = class_group(-23)
    L0 = lseries_from_character(G, G.characters()[0])
    assert abs(L0.pole_residue - 1.5) < 1e-10  # h / eps = 3/2
    Lq = lseries_from_form(QuadForm(1, 0, 1))
    assert abs(Lq.pole_residue - 1.0) < 1e-10  # Epstein residue is scale-free
    L15 = lseries_from_split(DiscriminantSplit(1, -15))
    assert abs(L15.pole_residue - 1.0) < 1e-10  # h / eps = 2/2


def test_nonprincipal_has_no_pole():
    G = class_group(-23)
    L = lseries_from_character(G, G.characters()[1])
    assert not L.has_pole and L.pole_residue == 0.0


@pytest.mark.parametrize("s", [0.5 + 0.3j, 0.2 + 14.134725j, 0.8 + 40.0j,
                               0.5 + 100.0j, 0.35 - 22.0j, 2.0 + 0j, 3.0 + 1.0j])
def test_lambda_vs_mpmath_disc4(s):
    L = lseries_from_split(DiscriminantSplit(1, -4))
    ref = _lambda_ref_disc4(s)
    mine = L.lambda_completed(s)
    assert abs(mine - ref) <= 1e-10 * (abs(ref) + 1e-300) + 1e-18 * abs(
        L.lambda_with_envelope(s)[1])


def test_functional_equation_battery():
    knobs2 = EvalKnobs(delta_num=5.0, margin=52.0)
    for disc in (-4, -15, -23):
        G = class_group(disc)
        for psi in G.characters()[:2]:
            L = lseries_from_character(G, psi)
            for sg in (0.2, 0.65):
                for t in (-17.0, 4.0, 33.0):
                    s = complex(sg, t)
                    a = L.lambda_completed(s)
                    b = L.lambda_completed(1 - s, knobs=knobs2)
                    assert abs(a - b) <= 1e-8 * abs(a)


def test_pole_guard():
    L = lseries_from_split(DiscriminantSplit(1, -4))
    with pytest.raises(PoleError):
        L.lambda_completed(1.0 + 1e-9j)
    with pytest.raises(PoleError):
        L.lambda_completed(0.0)


def test_l_value_dirichlet_sum_region():
    L = lseries_from_split(DiscriminantSplit(-3, 5))
    s = 2.4 + 1.1j
    direct = L.dirichlet_sum(s, 200000)
    assert abs(L.l_value(s) - direct) < 1e-9


def test_kronecker_factorization_of_real_characters():
    # L_psi for a real Hecke character is the product of the two Dirichlet L's
    G = class_group(-15)
    chars = G.characters()
    tables = {tuple(c.exponents): lseries_from_character(G, c) for c in chars}
    for sp in ((1, -15), (-3, 5)):
        split = DiscriminantSplit(*sp)
        Lsplit = lseries_from_split(split)
        # identify which character matches by comparing coefficients
        match = None
        for exps, L in tables.items():
            if np.allclose(L.coeffs(50), Lsplit.coeffs(50), atol=1e-12):
                match = L
        assert match is not None, f"no Hecke character matches split {sp}"
        for s in (1.7 + 0.4j, 0.6 + 9.0j):
            a = match.l_value(s)
            b = l_chi_d(split.d1, s) * l_chi_d(split.d2, s)
            assert abs(a - b) <= 1e-9 * max(1.0, abs(b))


def test_euler_product_consistency():
    from critline.arith import sieve_primes
    from critline.dirchar import kronecker

    G = class_group(-23)
    psi = G.characters()[1]
    L = lseries_from_character(G, psi)
    s = 2.0
    r = L.coeffs(10**4)
    prod = 1.0
    for p in sieve_primes(10**4):
        prod *= 1.0 / (1.0 - r[p - 1] * p ** -s + kronecker(-23, p) * p ** (-2 * s))
    assert abs(prod - L.dirichlet_sum(s, 10**6)) < 2e-4  # truncation-tail scale
    assert abs(prod - L.l_value(s)) < 2e-4


def test_epstein_direct_equals_lattice():
    for form, s in ((QuadForm(1, 0, 1), 2.0), (QuadForm(1, 1, 6), 1.5)):
        L = lseries_from_form(form)
        lat, tail = epstein_direct_lattice(form, s, radius=4 * 10**4)
        assert abs(L.l_value(s) - lat) <= tail


def test_epstein_via_hecke_routes():
    G = class_group(-23)
    for form in (QuadForm(1, 1, 6), QuadForm(2, 1, 3)):
        direct = lseries_from_form(form)
        comb = epstein_via_hecke(form, G)
        for s in (2.0 + 0j, 0.4 + 7.5j, 1.2 - 3.0j):
            a = direct.lambda_completed(s)
            b = comb.lambda_completed(s)
            assert abs(a - b) <= 1e-8 * (abs(a) + 1e-300)


def test_epstein_h1_reduces_to_single_term():
    comb = epstein_via_hecke(QuadForm(1, 0, 1), class_group(-4))
    assert len(comb.terms) == 1
    assert comb.terms[0][0] == 4.0  # eps = 4, h = 1


def test_hardy_z_reality_and_sign():
    L = lseries_from_form(QuadForm(1, 0, 1))
    # first zero of L(s, chi_-4) is at 6.02...; zeta's at 14.13...
    assert hardy_z(L, 6.0) * hardy_z(L, 6.1) < 0
    assert hardy_z(L, 14.1) * hardy_z(L, 14.2) < 0
    for t in (0.5, 7.7, 31.4, 120.0):
        assert hardy_reality_residual(L, t) < 1e-9


def test_scan_zeros_against_degree1():
    L = lseries_from_form(QuadForm(1, 0, 1))
    res = scan_zeros(L, 0.05, 30.0, step_scale=0.25)
    merged = sorted(
        [z for z, _ in deg1.scan_zeros_deg1(1, 0.05, 30.0).zeros]
        + [z for z, _ in deg1.scan_zeros_deg1(-4, 0.05, 30.0).zeros])
    assert len(res.zeros) == len(merged)
    for (z, w), ref in zip(res.zeros, merged):
        assert abs(z - ref) < 1e-6
        assert w <= 1e-8


def test_scan_zeros_empty_when_no_sign_change():
    L = lseries_from_form(QuadForm(1, 0, 1))
    res = scan_zeros(L, 1.0, 4.0)
    assert res.zeros == []


def test_scan_zeros_strictly_increasing():
    L = lseries_from_form(QuadForm(1, 1, 6))
    res = scan_zeros(L, 5.0, 25.0)
    ts = [z for z, _ in res.zeros]
    assert all(a < b for a, b in zip(ts, ts[1:]))


def test_scan_halved_step_consistency():
    L = lseries_from_form(QuadForm(1, 1, 6))
    a = scan_zeros(L, 10.0, 20.0, step_scale=1.0)
    b = scan_zeros(L, 10.0, 20.0, step_scale=0.5)
    assert a.count == b.count


def test_window_test_no_zero():
    L = lseries_from_form(QuadForm(1, 0, 1))
    out = window_test(L, 1.0, 3.0, T_param=100.0)
    assert not out["certified"]
    assert abs(out["J_scaled"] - abs(out["I_scaled"])) <= 1e-5 * out["J_scaled"]


def test_window_test_with_zero():
    L = lseries_from_form(QuadForm(1, 0, 1))
    out = window_test(L, 13.6, 1.0, T_param=100.0)  # zeta zero 14.13 inside
    assert out["certified"]
    assert out["J_scaled"] > abs(out["I_scaled"])


def test_window_test_agrees_with_scan():
    L = lseries_from_form(QuadForm(1, 1, 6))
    for t0 in (100.0, 104.0):
        out = window_test(L, t0, 2.0, T_param=200.0)
        found = scan_zeros(L, t0, t0 + 2.0).count
        assert out["certified"] == (found >= 1)


def test_window_test_rejects_bad_h():
    L = lseries_from_form(QuadForm(1, 0, 1))
    with pytest.raises(ValueError):
        window_test(L, 10.0, 0.0)
