"""Elementary multiplicative number theory shared by the other modules.

Everything here works on plain Python ints and is exact.
"""
from __future__ import annotations

import math
from functools import lru_cache


def sieve_primes(n: int) -> list[int]:
    """All primes <= n."""
    if n < 2:
        return []
    flags = bytearray(b"\x01") * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            start = p * p
            flags[start:: p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, v in enumerate(flags) if v]


def smallest_factor_table(n: int) -> list[int]:
    """spf[k] = smallest prime factor of k, for 0 <= k <= n."""
    spf = list(range(n + 1))
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == p:
            for k in range(p * p, n + 1, p):
                if spf[k] == k:
                    spf[k] = p
    return spf


@lru_cache(maxsize=100000)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| as ((p, e), ...), ascending p."""
    n = abs(n)
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 7
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """All positive divisors of |n|, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def tau(n: int) -> int:
    """Number of divisors."""
    out = 1
    for _, e in factorize(n):
        out *= e + 1
    return out


def tau_k(n: int, k: int) -> int:
    """k-dimensional divisor function: coefficient of zeta(s)^k, multiplicative
    with tau_k(p^e) = C(e + k - 1, k - 1)."""
    out = 1
    for _, e in factorize(n):
        out *= math.comb(e + k - 1, k - 1)
    return out


def mobius(n: int) -> int:
    m = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        m = -m
    return m


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def sigma1(n: int) -> int:
    """Sum of divisors."""
    out = 1
    for p, e in factorize(n):
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def smooth_part(m: int, d: int) -> int:
    """Largest divisor of m composed only of primes dividing d, i.e. gcd(m, d^inf)."""
    if d == 0:
        return m
    g = math.gcd(m, abs(d))
    out = 1
    while g > 1:
        out *= g
        m //= g
        g = math.gcd(m, g)
    return out


def divides_to_infinity(m: int, d: int) -> bool:
    """True iff every prime divisor of m divides d (m | d^inf)."""
    return smooth_part(m, d) == m


def mobius_table(n: int) -> list[int]:
    """mu[k] for 0 <= k <= n via a sieve."""
    mu = [1] * (n + 1)
    mu[0] = 0
    primes = sieve_primes(n)
    for p in primes:
        for k in range(p, n + 1, p):
            mu[k] = -mu[k]
        pp = p * p
        for k in range(pp, n + 1, pp):
            mu[k] = 0
    return mu
