import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from critline.dirchar import (DiscriminantSplit, GaussSum, PoleError, RealCharacter,
                              gauss_sum, is_fundamental, kronecker, l_chi, l_chi_d, splits)

mp.mp.dps = 30


def _sympy_kronecker(d, n):
    # reference built on sympy's jacobi_symbol plus the standard extensions
    from sympy import jacobi_symbol

    if n == 0:
        return 1 if abs(d) == 1 else 0
    sign = 1
    if n < 0:
        n = -n
        if d < 0:
            sign = -1
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    if k:
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5) and k % 2 == 1:
            sign = -sign
    return sign * jacobi_symbol(d, n)


def test_kronecker_exhaustive_small():
    for d in range(-40, 41):
        if d == 0:
            continue
        for n in range(-40, 41):
            assert kronecker(d, n) == _sympy_kronecker(d, n), (d, n)


@given(st.integers(-10**6, 10**6).filter(lambda d: d != 0), st.integers(-10**6, 10**6))
@settings(max_examples=300)
def test_kronecker_random_vs_sympy(d, n):
    assert kronecker(d, n) == _sympy_kronecker(d, n)


@given(st.integers(-500, 500).filter(lambda d: d != 0),
       st.integers(-200, 200), st.integers(-200, 200))
def test_kronecker_multiplicative_bottom(d, m, n):
    assert kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n)


def test_kronecker_unit_top():
    for d in (-163, -23, -4, 1, 5, 8):
        assert kronecker(d, 1) == 1
    assert kronecker(-4, 3) == -1
    assert kronecker(-23, 2) == 1


def test_is_fundamental():
    assert is_fundamental(-4)
    assert is_fundamental(-23)
    assert not is_fundamental(-12)
    assert is_fundamental(1)
    assert not is_fundamental(-9)
    assert is_fundamental(8)
    with pytest.raises(ValueError):
        is_fundamental(0)


def test_splits_examples():
    assert [(s.d1, s.d2) for s in splits(-23)] == [(1, -23), (-23, 1)]
    assert [(s.d1, s.d2) for s in splits(-15)] == [(1, -15), (-3, 5), (5, -3), (-15, 1)]
    assert [(s.d1, s.d2) for s in splits(-4)] == [(1, -4), (-4, 1)]
    for s in splits(-40):
        assert math.gcd(abs(s.d1), abs(s.d2)) == 1
        assert s.d1 * s.d2 == -40


def test_split_characters_multiply_to_chi_d():
    for disc in (-15, -20, -24, -35, -40):
        for sp in splits(disc):
            for n in range(1, 500):
                assert sp.chi1(n) * sp.chi2(n) == kronecker(disc, n)


def test_gauss_sum_tagged_values():
    g, num = gauss_sum(1)
    assert g.value == 1 and abs(num - 1) < 1e-12
    g, num = gauss_sum(-4)
    assert g.value == 2j and abs(num - 2j) < 1e-12
    g, num = gauss_sum(5)
    assert abs(g.value - math.sqrt(5)) < 1e-15
    g, num = gauss_sum(-23)
    assert g.imaginary and g.radicand == 23


def test_gauss_sum_product_tags():
    s1, _ = gauss_sum(-3)
    s2, _ = gauss_sum(5)
    sign, prod = s1 * s2
    assert sign == 1 and prod.imaginary and prod.radicand == 15
    sign, prod = s1 * s1
    assert sign == -1 and not prod.imaginary and prod.radicand == 9


def test_l_chi_zeta_value():
    assert abs(l_chi_d(1, 2.0) - math.pi**2 / 6) < 1e-10
    assert abs(l_chi_d(1, 4.0) - math.pi**4 / 90) < 1e-12


def test_l_chi_leibniz():
    assert abs(l_chi_d(-4, 1.0) - math.pi / 4) < 1e-10


def test_l_chi_conjugate_symmetry():
    s = complex(0.7, 9.3)
    for d in (1, -4, -15, 8):
        assert abs(l_chi_d(d, s.conjugate()) - l_chi_d(d, s).conjugate()) < 1e-12


def test_l_chi_pole():
    with pytest.raises(PoleError):
        l_chi_d(1, 1.0)


@pytest.mark.parametrize("s", [complex(2.0, 0), complex(0.5, 14.1), complex(-0.5, 3.0),
                               complex(1.5, 60.0), complex(0.2, -25.0)])
def test_l_chi_vs_mpmath(s):
    ref = complex(mp.zeta(mp.mpc(s)))
    assert abs(l_chi_d(1, s) - ref) <= 1e-10 * max(1.0, abs(ref))
    # L(s, chi_-4) = 4^{-s}(zeta(s,1/4) - zeta(s,3/4))
    ref4 = complex(mp.power(4, -mp.mpc(s)) * (mp.zeta(mp.mpc(s), mp.mpf(1) / 4)
                                              - mp.zeta(mp.mpc(s), mp.mpf(3) / 4)))
    assert abs(l_chi_d(-4, s) - ref4) <= 1e-10 * max(1.0, abs(ref4))


def test_character_table_period():
    chi = RealCharacter(-15)
    t = chi.table(300)
    for n in range(301):
        assert t[n] == kronecker(-15, n)


def test_split_rejects_bad_pairs():
    with pytest.raises(ValueError):
        DiscriminantSplit(3, -5)  # 3 is not a fundamental discriminant
    with pytest.raises(ValueError):
        DiscriminantSplit(-3, -3)
