"""Selberg mollifier: square-root-inverse coefficients alpha(nu), the
logarithmic smoothing, the Dirichlet polynomial eta(s), mollified-product
coefficient checks, the helper functions b(n) / B(n), and the kernel G(y)
with its weighted tail integral J(1, theta).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import factorize, tau
from .dirchar import DiscriminantSplit
from .lseries import LSeries, _gauss_adaptive, hardy_z


def _sqrt_series(f: list, k_max: int):
    """Coefficients of sqrt(F) for a power series F with F(0) = 1.

    Works for exact Fractions and for floats: a_k = (f_k - sum_{0<i<k} a_i a_{k-i}) / 2.
    """
    one = f[0]
    if one != 1:
        raise ValueError("series must start at 1")
    a = [f[0]] + [None] * k_max
    for k in range(1, k_max + 1):
        fk = f[k] if k < len(f) else 0
        acc = fk
        for i in range(1, k):
            acc -= a[i] * a[k - i]
        a[k] = acc / 2
    return a


def alpha_prime_powers(split: DiscriminantSplit, p: int, k_max: int) -> list[Fraction]:
    """alpha(p^k), k = 0..k_max, from the binomial expansion of the local
    Euler factor of L^{-1/2} = ((1 - chi1(p) T)(1 - chi2(p) T))^{1/2}, exact."""
    x1, x2 = split.chi1(p), split.chi2(p)
    f = [Fraction(1), Fraction(-(x1 + x2)), Fraction(x1 * x2)]
    f += [Fraction(0)] * max(0, k_max - 2)
    return _sqrt_series([Fraction(v) for v in f[: k_max + 1]], k_max)


def alpha_prime_powers_closed(split: DiscriminantSplit, p: int, k_max: int) -> list[Fraction]:
    """Closed forms for alpha(p^k) at primes coprime to the discriminant:

      alpha(p)    = -(chi1(p) + chi2(p)) / 2,
      alpha(p^2)  = -(chi1^2(p) + chi2^2(p)) / 8 + chi_D(p) / 4,
      alpha(p^k)  = 0 for odd k >= 3,
      alpha(p^2k) = binom(1/2, k) (-1)^k for chi_D(p) = -1 (zero when chi_D(p) = 1).
    """
    x1, x2 = split.chi1(p), split.chi2(p)
    if x1 * x2 == 0:
        raise ValueError("closed forms require (p, D) = 1")
    chd = x1 * x2
    out = [Fraction(1)] + [Fraction(0)] * k_max
    if k_max >= 1:
        out[1] = Fraction(-(x1 + x2), 2)
    if k_max >= 2:
        out[2] = Fraction(-(x1 * x1 + x2 * x2), 8) + Fraction(chd, 4)
    if chd == -1:
        # (1 - T^2)^{1/2}: alpha(p^{2k}) = C(1/2, k) (-1)^k
        coef = Fraction(1)
        for k in range(1, k_max // 2 + 1):
            coef *= Fraction(3 - 2 * k, 2 * k)  # C(1/2,k) = C(1/2,k-1) * (1/2 - k + 1)/k
            out[2 * k] = coef * (-1) ** k
    return out


@dataclass
class MollifierTable:
    """Mollifier data up to X: exact alpha(nu), smoothing weights, and beta."""

    X: float
    alpha: list  # Fraction (real-character case) or float, index nu, alpha[0] unused
    lfac: np.ndarray  # smoothing L(nu)
    beta: np.ndarray  # float beta(nu) = alpha(nu) L(nu)
    split: DiscriminantSplit | None = None

    @property
    def nu_max(self) -> int:
        return len(self.beta) - 1

    def smoothing(self, nu: int) -> float:
        return float(self.lfac[nu])

    def eta(self, s: complex) -> complex:
        """eta(s) = sum_{nu <= X} beta(nu) nu^{-s}, summed by ascending nu."""
        s = complex(s)
        total = 0j
        for nu in range(1, self.nu_max + 1):
            b = self.beta[nu]
            if b:
                total += b * nu ** (-s)
        return total

    def beta_fraction(self, nu: int) -> Fraction:
        """Exact rational value of the stored beta: exact alpha below sqrt(X),
        alpha times the binary-float smoothing weight above it."""
        a = self.alpha[nu]
        if not isinstance(a, Fraction):
            a = Fraction(a)
        if nu * nu < self.X:
            return a
        return a * Fraction(float(self.lfac[nu]))


def smoothing_weights(X: float, nu_max: int) -> np.ndarray:
    """L(nu): 1 below sqrt(X), 2 log(X/nu)/log(X) on [sqrt(X), X], 0 beyond."""
    out = np.zeros(nu_max + 1)
    logx = math.log(X)
    for nu in range(1, nu_max + 1):
        if nu * nu < X:
            out[nu] = 1.0
        elif nu <= X:
            out[nu] = 2.0 * math.log(X / nu) / logx
    return out


def alpha_table(split: DiscriminantSplit, X: float, cross_check: bool = True) -> MollifierTable:
    """Multiplicative alpha(nu) for nu <= X (exact rationals), beta = alpha * L.

    The prime-power values come from the binomial expansion of each local
    Euler factor to the power -1/2; at primes coprime to the discriminant the
    closed forms are used as a cross-check when cross_check is set.
    """
    if X < 3:
        raise ValueError("need X >= 3")
    nu_max = int(X)
    alpha = [Fraction(0)] * (nu_max + 1)
    alpha[1] = Fraction(1)
    ppows: dict[int, list[Fraction]] = {}
    for p in range(2, nu_max + 1):
        if any(p % q == 0 for q in ppows if q < p):
            continue
        k_max = int(math.log(nu_max) / math.log(p))
        vals = alpha_prime_powers(split, p, k_max)
        if cross_check and split.chi1(p) * split.chi2(p) != 0:
            closed = alpha_prime_powers_closed(split, p, k_max)
            if vals != closed:
                raise AssertionError(f"alpha closed forms disagree at p={p}")
        ppows[p] = vals
    for nu in range(2, nu_max + 1):
        val = Fraction(1)
        for p, e in factorize(nu):
            val *= ppows[p][e]
        alpha[nu] = val
    lfac = smoothing_weights(X, nu_max)
    beta = np.array([0.0] + [float(alpha[nu]) * lfac[nu] for nu in range(1, nu_max + 1)])
    return MollifierTable(X=X, alpha=alpha, lfac=lfac, beta=beta, split=split)


def alpha_table_from_lseries(lser: LSeries, X: float) -> MollifierTable:
    """Float alpha table for a general degree-2 series (complex Hecke character):
    local factor 1 - r(p) T + chi_D(p) T^2 raised to the power 1/2."""
    from .dirchar import kronecker

    if X < 3:
        raise ValueError("need X >= 3")
    nu_max = int(X)
    alpha = [0.0] * (nu_max + 1)
    alpha[1] = 1.0
    ppows: dict[int, list[float]] = {}
    coeffs = lser.coeffs(nu_max)
    for p in range(2, nu_max + 1):
        if any(p % q == 0 for q in ppows if q < p):
            continue
        k_max = int(math.log(nu_max) / math.log(p))
        f = [1.0, -float(coeffs[p - 1]), float(kronecker(lser.disc, p))]
        f += [0.0] * max(0, k_max - 2)
        ppows[p] = _sqrt_series(f[: k_max + 1], k_max)
    for nu in range(2, nu_max + 1):
        val = 1.0
        for p, e in factorize(nu):
            val *= ppows[p][e]
        alpha[nu] = val
    lfac = smoothing_weights(X, nu_max)
    beta = np.array([0.0] + [alpha[nu] * lfac[nu] for nu in range(1, nu_max + 1)])
    return MollifierTable(X=X, alpha=alpha, lfac=lfac, beta=beta, split=None)


def r_int_table(split: DiscriminantSplit, n_max: int) -> list[int]:
    """Exact r(n) = sum_{ab=n} chi1(a) chi2(b) for 0 <= n <= n_max."""
    out = [0] * (n_max + 1)
    for a in range(1, n_max + 1):
        va = split.chi1(a)
        if va:
            for b in range(1, n_max // a + 1):
                vb = split.chi2(b)
                if vb:
                    out[a * b] += va * vb
    return out


def mollified_coeffs(split: DiscriminantSplit, M: MollifierTable, N: int) -> list[Fraction]:
    """c(n) = sum_{abc = n} r(a) beta(b) beta(c) for n <= N, exact rationals.

    beta enters through beta_fraction, so the arithmetic is exact for the
    stored table; below sqrt(X) that value is the true rational beta and the
    convolution identity forces c(1) = 1, c(n) = 0 for 1 < n < sqrt(X).
    """
    if N > M.X:
        raise ValueError("need N <= X")
    r = r_int_table(split, N)
    betaf = [Fraction(0)] * (min(M.nu_max, N) + 1)
    for nu in range(1, len(betaf)):
        betaf[nu] = M.beta_fraction(nu)
    # u = r * beta, then c = u * beta (Dirichlet convolutions)
    u = [Fraction(0)] * (N + 1)
    for b in range(1, len(betaf)):
        if betaf[b]:
            for a in range(1, N // b + 1):
                if r[a]:
                    u[a * b] += r[a] * betaf[b]
    c = [Fraction(0)] * (N + 1)
    for b in range(1, len(betaf)):
        if betaf[b]:
            for m in range(1, N // b + 1):
                if u[m]:
                    c[m * b] += u[m] * betaf[b]
    return c


def mollified_coeffs_triple(split: DiscriminantSplit, M: MollifierTable, N: int) -> list[Fraction]:
    """Same c(n) by the direct triple loop over a b c = n (independent route)."""
    if N > M.X:
        raise ValueError("need N <= X")
    r = r_int_table(split, N)
    nu_hi = min(M.nu_max, N)
    betaf = [Fraction(0)] * (nu_hi + 1)
    for nu in range(1, nu_hi + 1):
        betaf[nu] = M.beta_fraction(nu)
    c = [Fraction(0)] * (N + 1)
    for b in range(1, nu_hi + 1):
        if not betaf[b]:
            continue
        for cc in range(1, min(nu_hi, N // b) + 1):
            if not betaf[cc]:
                continue
            bc = b * cc
            for a in range(1, N // bc + 1):
                if r[a]:
                    c[a * bc] += r[a] * betaf[b] * betaf[cc]
    return c


@lru_cache(maxsize=None)
def _b_prime_power(split: DiscriminantSplit, p: int, k: int) -> Fraction:
    vals = alpha_prime_powers(split, p, k)
    return sum(abs(vals[i]) * abs(vals[k - i]) for i in range(k + 1))


def b_helpers(split: DiscriminantSplit, n: int) -> tuple[Fraction, int]:
    """(b(n), B(n)): b(n) = sum_{n1 n2 = n} |alpha(n1) alpha(n2)|, and the
    majorant B with B(p) = |r(p)|, B(p^k) = tau(p^k) for k > 1; both
    multiplicative."""
    b_val = Fraction(1)
    big = 1
    for p, e in factorize(n):
        b_val *= _b_prime_power(split, p, e)
        if e == 1:
            big *= abs(split.chi1(p) + split.chi2(p))
        else:
            big *= e + 1
    return b_val, big


def window_integrals(F, M: MollifierTable | None, t: float, H: float,
                     T_param: float, quad_rel_tol: float = 1e-6) -> dict:
    """The two window integrals used by the sign-change machinery:

      I = int_t^{t+H} Lambda(1/2+iu) |eta(1/2+iu)|^2 exp((pi/2 - 1/T) u) du,
      M = int_t^{t+H} L(1/2+iu) eta^2(1/2+iu) du - H   (complex).
    """
    if H <= 0:
        raise ValueError("need H > 0")
    wexp = math.pi / 2.0 - 1.0 / T_param
    base = wexp * t

    def eta(u):
        return M.eta(complex(0.5, u)) if M is not None else 1.0 + 0j

    def f_i(u):
        return hardy_z(F, u) * abs(eta(u)) ** 2 * math.exp(wexp * u - base)

    def f_m(u):
        return F.l_value(complex(0.5, u)) * eta(u) ** 2

    i_val = _gauss_adaptive(f_i, t, t + H, quad_rel_tol) * math.exp(base)
    m_val = _gauss_adaptive(f_m, t, t + H, quad_rel_tol) - H
    return {"I": i_val, "M": m_val, "t": t, "H": H, "T_param": T_param,
            "quad_rel_tol": quad_rel_tol}


def g_kernel(lser: LSeries, M: MollifierTable | None, y: float, T_param: float,
             tail_eps: float = 1e-20) -> float:
    """G(y) = | sum_{n, nu1, nu2} r(n) beta(nu1) beta(nu2) / nu2
               * exp(-(2 pi n nu1 / (sqrt(D) nu2)) y (sin d + i cos d)) |^2,
    d = 1/T_param; the n-sum is truncated when the exponential damping factor
    drops below tail_eps."""
    if y < 1:
        raise ValueError("need y >= 1")
    delta = 1.0 / T_param
    sd, cd = math.sin(delta), math.cos(delta)
    sqd = math.sqrt(-lser.disc)
    total = 0j
    if M is None:
        pairs = [(1, 1, 1.0)]
    else:
        pairs = [(n1, n2, float(M.beta[n1] * M.beta[n2]) / n2)
                 for n1 in range(1, M.nu_max + 1)
                 for n2 in range(1, M.nu_max + 1)
                 if M.beta[n1] and M.beta[n2]]
    for nu1, nu2, wgt in pairs:
        mu = 2.0 * math.pi * nu1 * y / (sqd * nu2)
        n_cut = int(-math.log(tail_eps) / (mu * sd)) + 1
        n = np.arange(1, n_cut + 1, dtype=float)
        expo = np.exp(-mu * n * complex(sd, cd))
        total += wgt * complex(np.sum(lser.coeffs(n_cut) * expo))
    return abs(total) ** 2


def j_estimate(lser: LSeries, M: MollifierTable | None, theta: float,
               T_param: float, U_max: float | None = None,
               quad_rel_tol: float = 1e-8) -> dict:
    """J(1, theta) = int_1^U G(u) u^{-theta} du with U chosen so the integrand
    has decayed below 1e-12 of its peak; reports the integral and the scaled
    ratio value * (theta log T)^{1/3} / T."""
    if not (1.0 / math.log(T_param) <= theta <= 1.0 + 1e-12):
        raise ValueError("theta outside [1/log T, 1]")

    def integrand(u):
        return g_kernel(lser, M, u, T_param) * u ** (-theta)

    peak = integrand(1.0)
    if U_max is None:
        u = 64.0
        while integrand(u) > 1e-12 * peak:
            u *= 2.0
            if u > 2 ** 40:
                break
        U_max = u
    # integrate on geometric panels, adaptive within each
    total = 0.0
    lo = 1.0
    while lo < U_max:
        hi = min(lo * 4.0, U_max)
        total += _gauss_adaptive(integrand, lo, hi, quad_rel_tol)
        lo = hi
    ratio = total * (theta * math.log(T_param)) ** (1.0 / 3.0) / T_param
    return {"J": total, "ratio": ratio, "U_max": U_max, "theta": theta,
            "T_param": T_param}
