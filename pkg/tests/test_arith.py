import math

from hypothesis import given, strategies as st

from critline.arith import (divisors, factorize, is_squarefree, mobius, mobius_table,
                            sieve_primes, sigma1, smooth_part, tau, tau_k)


def test_sieve_small():
    assert sieve_primes(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert sieve_primes(1) == []


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip(n):
    prod = 1
    for p, e in factorize(n):
        prod *= p**e
    assert prod == n


@given(st.integers(min_value=1, max_value=10**5))
def test_divisor_functions(n):
    ds = divisors(n)
    assert len(ds) == tau(n)
    assert sum(ds) == sigma1(n)
    assert all(n % d == 0 for d in ds)


def test_tau_k_is_zeta_power_coefficients():
    # tau_3 by explicit triple convolution up to 60
    n_max = 60
    direct = [0] * (n_max + 1)
    for a in range(1, n_max + 1):
        for b in range(1, n_max // a + 1):
            for c in range(1, n_max // (a * b) + 1):
                direct[a * b * c] += 1
    for n in range(1, n_max + 1):
        assert tau_k(n, 3) == direct[n]


def test_mobius_table_matches_pointwise():
    table = mobius_table(500)
    for n in range(1, 501):
        assert table[n] == mobius(n)


@given(st.integers(min_value=1, max_value=10**4), st.integers(min_value=2, max_value=60))
def test_smooth_part(m, d):
    s = smooth_part(m, d)
    assert m % s == 0
    assert math.gcd(m // s, d) == 1
    assert all(d % p == 0 for p, _ in factorize(s))


def test_smooth_part_examples():
    assert smooth_part(72, 6) == 72
    assert smooth_part(72, 2) == 8
    assert smooth_part(7, 15) == 1
