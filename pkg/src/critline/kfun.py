"""The multiplicative K-function family attached to a coprime splitting of a
fundamental discriminant, their bounds, the Selberg quadruple sums S(z) and
S_{l,l}(z) with dual (naive and Moebius-factored) evaluation routes, and the
decorated sums of the reflection identity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import divisors, factorize, mobius, prime_divisors, smooth_part
from .dirchar import DiscriminantSplit
from .mollifier import MollifierTable


@dataclass
class KContext:
    """Splitting data with memoized K evaluations and a series tail budget."""

    split: DiscriminantSplit
    budget: float = 1e-14
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def disc(self) -> int:
        return self.split.disc

    @property
    def big_d(self) -> int:
        return -self.split.disc

    def chi1(self, n: int) -> int:
        return self.split.chi1(n)

    def chi2(self, n: int) -> int:
        return self.split.chi2(n)

    def chi_d(self, n: int) -> int:
        return self.split.chi1(n) * self.split.chi2(n)

    def r_local(self, p: int, j_max: int) -> list[int]:
        """r(p^j) for j = 0..j_max via the local recursion
        r(p^{j+1}) = (chi1 + chi2)(p) r(p^j) - chi_D(p) r(p^{j-1})."""
        key = ("rloc", p, j_max)
        if key not in self._cache:
            x1, x2 = self.chi1(p), self.chi2(p)
            vals = [1, x1 + x2]
            for _ in range(2, j_max + 1):
                vals.append((x1 + x2) * vals[-1] - x1 * x2 * vals[-2])
            self._cache[key] = vals[: j_max + 1]
        return self._cache[key]


def k_series(ctx: KContext, m: int, s: complex) -> complex:
    """K(m, s): product over p^alpha || m of the inverted local square-coefficient
    series times sum_k r(p^{alpha+k}) r(p^k) p^{-ks}, truncated within budget.

    Requires Re s > 0; |K(m, s)| <= tau_2000(m) on Re s >= 1/2.
    """
    s = complex(s)
    if s.real <= 0:
        raise ValueError("K(m, s) needs Re s > 0")
    key = ("K", m, s)
    if key in ctx._cache:
        return ctx._cache[key]
    out = 1 + 0j
    for p, alpha in factorize(m):
        out *= _k_local(ctx, p, alpha, s)
    ctx._cache[key] = out
    return out


def _k_local(ctx: KContext, p: int, alpha: int, s: complex) -> complex:
    sig = s.real
    # series length from tau(p^{a+k}) tau(p^k) p^{-k sigma} geometric tail
    ratio = p ** (-sig)
    k = 1
    while (alpha + k + 1) * (k + 1) * ratio ** k / (1 - ratio) > ctx.budget:
        k += 1
        if k > 100000:
            raise ArithmeticError("K series truncation did not converge")
    k_max = k
    r = ctx.r_local(p, alpha + k_max)
    ps = p ** (-s)
    series = 0j
    term = 1 + 0j
    for j in range(k_max + 1):
        series += r[alpha + j] * r[j] * term
        term *= ps
    x1s = 1 if ctx.chi1(p) else 0   # chi1^2 = principal character
    x2s = 1 if ctx.chi2(p) else 0
    xd = ctx.chi_d(p)
    inv = (1 - x1s * ps) * (1 - x2s * ps) * (1 - xd * ps) ** 2 / (1 - xd * xd * ps * ps)
    return inv * series


def k_diag(ctx: KContext, l: int, m: int, z: complex) -> complex:
    """K_{l,l}(m, z) by the closed finite-product formula.

    Prefactor (m, d_l^inf)^{-z} chi_{d_l}((m, d_other^inf)) chi_{d_other}((m, d_l^inf));
    at p^alpha || m with (p, D) = 1 the local factor is
    (1 + chi_D(p)/p)^{-1} chi_{d_l}(p^alpha) (S_alpha - p^{-z-1} S_{alpha-2})
    with S_j = sum_{i<=j} chi_D(p^i) p^{-iz}.  Moduli are taken positive.
    """
    if l not in (1, 2):
        raise ValueError("l must be 1 or 2")
    z = complex(z)
    if z.real < -0.4:
        raise ValueError("K_ll closed form used outside Re z >= -0.4")
    key = ("Kll", l, m, z)
    if key in ctx._cache:
        return ctx._cache[key]
    d_l = ctx.split.d1 if l == 1 else ctx.split.d2
    d_o = ctx.split.d2 if l == 1 else ctx.split.d1
    chi_l = ctx.split.chi1 if l == 1 else ctx.split.chi2
    chi_o = ctx.split.chi2 if l == 1 else ctx.split.chi1
    m_l = smooth_part(m, d_l)
    m_o = smooth_part(m, d_o)
    out = m_l ** (-z) * chi_l(m_o) * chi_o(m_l)
    big_d = ctx.big_d
    for p, alpha in factorize(m):
        if big_d % p == 0:
            continue
        xd = ctx.chi_d(p)
        pz = p ** (-z)
        s_a = _geom_chi(xd, pz, alpha)
        s_a2 = _geom_chi(xd, pz, alpha - 2)
        local = (s_a - pz / p * s_a2) / (1 + xd / p)
        out *= chi_l(p) ** alpha * local
    ctx._cache[key] = out
    return out


def _geom_chi(xd: int, pz: complex, j: int) -> complex:
    """sum_{i=0}^{j} xd^i pz^i (empty sum for j < 0)."""
    if j < 0:
        return 0j
    total = 1 + 0j
    term = 1 + 0j
    for _ in range(j):
        term *= xd * pz
        total += term
    return total


def k_diag_notation(ctx: KContext, l: int, m: int, z: complex) -> complex:
    """K_{l,l}(m, z) via the defining Euler-product form (secondary route):
    local factor (1 - 1/p^2)^{-1} (1 - chi_D(p)/p^z)^{-1} (1 - chi_D(p)/p)
    * chi_{d_l}(p^alpha) (1 - p^{-z-1} + chi_D(p^{alpha+1}) p^{-alpha z - 1} (1 - p^{1-z})).

    Singular (removably) when chi_D(p) p^{-z} = 1; use k_diag there.
    """
    z = complex(z)
    d_l = ctx.split.d1 if l == 1 else ctx.split.d2
    d_o = ctx.split.d2 if l == 1 else ctx.split.d1
    chi_l = ctx.split.chi1 if l == 1 else ctx.split.chi2
    chi_o = ctx.split.chi2 if l == 1 else ctx.split.chi1
    m_l = smooth_part(m, d_l)
    m_o = smooth_part(m, d_o)
    out = m_l ** (-z) * chi_l(m_o) * chi_o(m_l)
    for p, alpha in factorize(m):
        if ctx.big_d % p == 0:
            continue
        xd = ctx.chi_d(p)
        pz = p ** (-z)
        bracket = 1 - pz / p + xd ** (alpha + 1) * pz ** alpha / p * (1 - p * pz)
        denom = 1 - xd * pz
        if abs(denom) < 1e-12:
            raise ZeroDivisionError("notation form singular here; use k_diag")
        out *= (1 - p ** -2.0) ** -1 * (1 - xd / p) / denom * chi_l(p) ** alpha * bracket
    return out


def k_cross(ctx: KContext, m1: int, m2: int, z: complex) -> complex:
    """K_{1,2}(m1, m2, z) for (m1, m2) = 1, |d2| dividing m1, |d1| dividing m2.

    chi_{d1}(m1) chi_{d2}(m2) * sum over divisors q of the D-smooth part of
    m1 m2 / D of q^{-z}, times the local factors at p^alpha || m1 m2 coprime
    to D.  The q-sum is a finite divisor sum, evaluated exactly.
    """
    z = complex(z)
    if math.gcd(m1, m2) != 1:
        raise ValueError("need (m1, m2) = 1")
    d1, d2 = ctx.split.d1, ctx.split.d2
    if m1 % abs(d2) != 0 or m2 % abs(d1) != 0:
        raise ValueError("need |d2| | m1 and |d1| | m2")
    big_d = ctx.big_d
    pref = ctx.chi1(m1) * ctx.chi2(m2)
    if pref == 0:
        return 0j
    body = m1 * m2 // big_d
    qsum = sum(q ** (-z) for q in divisors(smooth_part(body, big_d)))
    out = pref * qsum
    for p, alpha in factorize(m1 * m2):
        if big_d % p == 0:
            continue
        xd = ctx.chi_d(p)
        pz = p ** (-z)
        s_a = _geom_chi(1, pz, alpha)
        s_a2 = _geom_chi(1, pz, alpha - 2)
        out *= (s_a - xd * pz / p * s_a2) / (1 + xd / p)
    return out


def g_smooth(n: int) -> float:
    """G_N = prod_{p | N} (1 + p^{-3/4})^2."""
    out = 1.0
    for p in prime_divisors(n):
        out *= (1.0 + p ** -0.75) ** 2
    return out


# -- Selberg quadruple sums --------------------------------------------------

NAIVE_X_GUARD = 60
FACTORED_X_GUARD = 200


def _pair_weights(M: MollifierTable, X: int, z: complex) -> np.ndarray:
    """u[A] = sum over nu mu = A, nu, mu <= X of beta(nu) beta(mu) nu^{z-1} mu^{-1}."""
    u = np.zeros(X * X + 1, dtype=complex)
    for nu in range(1, X + 1):
        bn = M.beta[nu] if nu <= M.nu_max else 0.0
        if not bn:
            continue
        wn = bn * nu ** (complex(z) - 1.0)
        for mu in range(1, X + 1):
            bm = M.beta[mu] if mu <= M.nu_max else 0.0
            if bm:
                u[nu * mu] += wn * bm / mu
    return u


def selberg_quadruple(ctx: KContext, M: MollifierTable, X: int, z: complex,
                      kernel: str = "K", l: int = 1) -> complex:
    """Naive evaluation of the quadruple sum over nu_1..nu_4 <= X:

      sum beta(nu1) beta(nu2) beta(nu3) beta(nu4) / (nu2 nu4)
          * (q / (nu1 nu3))^{1-z} * Kf(nu1 nu4 / q) Kf(nu2 nu3 / q),

    q = gcd(nu1 nu4, nu2 nu3); Kf is K(., 1-z) or K_{l,l}(., z).  The pairs
    (nu1, nu4) and (nu3, nu2) are aggregated by their products first, which
    is an exact regrouping of the raw four-fold loop.
    """
    if X > NAIVE_X_GUARD:
        raise ValueError(f"naive Selberg sum capped at X = {NAIVE_X_GUARD}")
    z = complex(z)
    u = _pair_weights(M, X, z)
    support = np.nonzero(u)[0]
    kf = _kernel_table(ctx, int(support.max(initial=1)), z, kernel, l)
    total = 0j
    for a_idx in support:
        ua = u[a_idx]
        for b_idx in support:
            q = math.gcd(int(a_idx), int(b_idx))
            total += ua * u[b_idx] * q ** (1.0 - z) * kf[a_idx // q] * kf[b_idx // q]
    return total


def selberg_quadruple_raw(ctx: KContext, M: MollifierTable, X: int, z: complex,
                          kernel: str = "K", l: int = 1) -> complex:
    """Literal four-fold loop (very small X only); validates the regrouping."""
    if X > 12:
        raise ValueError("raw quadruple loop capped at X = 12")
    z = complex(z)
    kf = _kernel_table(ctx, X * X, z, kernel, l)
    total = 0j
    beta = [M.beta[nu] if nu <= M.nu_max else 0.0 for nu in range(X + 1)]
    for n1 in range(1, X + 1):
        for n2 in range(1, X + 1):
            for n3 in range(1, X + 1):
                for n4 in range(1, X + 1):
                    w = beta[n1] * beta[n2] * beta[n3] * beta[n4]
                    if not w:
                        continue
                    q = math.gcd(n1 * n4, n2 * n3)
                    total += (w / (n2 * n4) * (q / (n1 * n3)) ** (1.0 - z)
                              * kf[n1 * n4 // q] * kf[n2 * n3 // q])
    return total


def selberg_factored(ctx: KContext, M: MollifierTable, X: int, z: complex,
                     kernel: str = "K", l: int = 1) -> complex:
    """Moebius-factored route:

      S = sum_{d <= X^2} sum_{m | d} mu(m) (d/m)^{1-z} g(d, m)^2,
      g(d, m) = sum_{A = nu nu' = 0 mod d} u(A) Kf(A m / d),

    exact rearrangement of the quadruple sum via gcd inversion.
    """
    if X > FACTORED_X_GUARD:
        raise ValueError(f"factored Selberg sum capped at X = {FACTORED_X_GUARD}")
    z = complex(z)
    u = _pair_weights(M, X, z)
    support = np.nonzero(u)[0]
    kf = _kernel_table(ctx, int(support.max(initial=1)), z, kernel, l)
    x2 = X * X
    g = {}
    for a_idx in support:
        ua = u[a_idx]
        for d in divisors(int(a_idx)):
            for m in divisors(d):
                if mobius(m) == 0:
                    continue
                g[(d, m)] = g.get((d, m), 0j) + ua * kf[int(a_idx) * m // d]
    total = 0j
    for (d, m), val in g.items():
        total += mobius(m) * (d / m) ** (1.0 - z) * val * val
    return total


def _kernel_table(ctx: KContext, n_max: int, z: complex, kernel: str, l: int):
    if kernel == "K":
        return [None] + [k_series(ctx, n, 1.0 - z) for n in range(1, n_max + 1)]
    if kernel == "Kll":
        return [None] + [k_diag(ctx, l, n, z) for n in range(1, n_max + 1)]
    raise ValueError("kernel must be 'K' or 'Kll'")


def selberg_s(ctx: KContext, M: MollifierTable, X: int, z: complex,
              route: str = "auto") -> complex:
    """S(z) with K(., 1-z) kernels; route in {'naive', 'factored', 'auto'}."""
    if route == "naive" or (route == "auto" and X <= 20):
        return selberg_quadruple(ctx, M, X, z, kernel="K")
    return selberg_factored(ctx, M, X, z, kernel="K")


def selberg_sll(ctx: KContext, l: int, M: MollifierTable, X: int, z: complex,
                route: str = "auto") -> complex:
    """S_{l,l}(z) with K_{l,l}(., z) kernels."""
    if route == "naive" or (route == "auto" and X <= 20):
        return selberg_quadruple(ctx, M, X, z, kernel="Kll", l=l)
    return selberg_factored(ctx, M, X, z, kernel="Kll", l=l)


def s_tilde(ctx: KContext, l: int, M: MollifierTable, X: int, w: complex,
            route: str = "auto") -> complex:
    """Decorated diagonal sum:

      S~_{1,1}(w) = S_{1,1}(w) |d1|^{-w/2} |d2|^{w/2}
                    prod_{p | d1} (1 - p^{w-1}) prod_{p | d2} (1 - p^{-w-1}),

    and with the roles of d1, d2 swapped for l = 2.  Moduli positive.
    """
    w = complex(w)
    d_l = ctx.split.d1 if l == 1 else ctx.split.d2
    d_o = ctx.split.d2 if l == 1 else ctx.split.d1
    base = selberg_sll(ctx, l, M, X, w, route=route)
    deco = abs(d_l) ** (-w / 2.0) * abs(d_o) ** (w / 2.0)
    for p in prime_divisors(d_l):
        deco *= 1.0 - p ** (w - 1.0)
    for p in prime_divisors(d_o):
        deco *= 1.0 - p ** (-w - 1.0)
    return base * deco
