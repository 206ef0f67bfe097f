"""Analytic machinery for degree-2 L-series with real coefficients and their
real linear combinations (Epstein zeta functions in particular).

The completed function Lambda(s) = (2 pi / sqrt(D))^{-s} Gamma(s) L(s) is
evaluated through a smoothed series along a rotated ray,

  Lambda(s) = kappa (w^{s-1}/(s-1) - w^s/s)
            + sum_n r(n) [ (a n)^{-s} Gamma(s, a n w) + (a n)^{s-1} Gamma(1-s, a n conj(w)) ],

with a = 2 pi / sqrt(D) and w = exp(i (pi/2 - delta) sign(Im s)).  The
rotation keeps every factor within floating-point range up to |Im s| of a few
hundred, and the representation is exact for any admissible w, so changing
the rotation is a consistency check rather than a model change.  kappa is the
residue of Lambda at s = 1; it is fitted once from the coefficient table and
frozen (zero for series without a pole).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.special import loggamma

from .dirchar import DiscriminantSplit, PoleError
from .gammainc import gamma_upper_unnormalized, q_regularized
from .quadfield import ClassGroup, HeckeCharacter, QuadForm, class_group, epsilon_units


@dataclass(frozen=True)
class EvalKnobs:
    """Internal accuracy knobs for the smoothed-series evaluation."""

    delta_num: float = 8.0   # rotation delta = min(cap, num / (|t| + 2))
    delta_cap: float = 0.9
    margin: float = 46.0     # exponential tail margin in the cutoff


DEFAULT_KNOBS = EvalKnobs()


class LSeries:
    """Degree-2 Dirichlet series with real coefficients and conductor scale
    a = 2 pi / sqrt(D); supports analytic continuation via the smoothed series.
    """

    def __init__(self, minus_d: int, coef_factory, has_pole: bool, label: str = ""):
        self.disc = minus_d
        self.scale = 2.0 * math.pi / math.sqrt(-minus_d)
        self.has_pole = has_pole
        self.label = label or f"L(disc {minus_d})"
        self._factory = coef_factory
        self._coeffs = np.zeros(0)
        self.pole_residue = self._fit_kappa() if has_pole else 0.0

    # -- coefficients -----------------------------------------------------
    def coeffs(self, n_max: int) -> np.ndarray:
        """r(1..n_max) as a float array (index 0 is r(1))."""
        if len(self._coeffs) < n_max:
            grow = max(n_max, 2 * len(self._coeffs), 1024)
            self._coeffs = np.asarray(self._factory(grow), dtype=float)
            if len(self._coeffs) != grow:
                raise AssertionError("coefficient factory returned wrong length")
        return self._coeffs[:n_max]

    def coeff(self, n: int) -> float:
        return self.coeffs(n)[n - 1]

    # -- kappa ------------------------------------------------------------
    def _fit_kappa(self) -> float:
        """Residue of Lambda at s = 1 from y f(y) = kappa (1 - y) + O(e^{-a/y}),
        f(y) = sum r(n) e^{-a n y}; fitted at two mesh points and frozen."""
        a = self.scale
        vals = []
        for y in (0.05, 0.025):
            n_cut = int(50.0 / (a * y)) + 10
            n = np.arange(1, n_cut + 1)
            f = float(np.sum(self.coeffs(n_cut) * np.exp(-a * n * y)))
            vals.append(y * f / (1.0 - y))
        if abs(vals[0] - vals[1]) > 1e-8 * max(1.0, abs(vals[1])):
            raise AssertionError(f"kappa fit unstable: {vals}")
        return vals[1]

    # -- evaluation -------------------------------------------------------
    def lambda_completed(self, s: complex, log_shift: complex = 0.0,
                         knobs: EvalKnobs = DEFAULT_KNOBS) -> complex:
        """Lambda(s) * exp(log_shift)."""
        return self.lambda_with_envelope(s, log_shift, knobs)[0]

    def lambda_with_envelope(self, s: complex, log_shift: complex = 0.0,
                             knobs: EvalKnobs = DEFAULT_KNOBS) -> tuple[complex, float]:
        """(Lambda(s) e^{log_shift}, envelope): envelope is the sum of the
        absolute values of all assembled terms, the natural magnitude scale
        against which roundoff in the result must be judged."""
        s = complex(s)
        if self.has_pole and min(abs(s), abs(s - 1.0)) < 1e-6:
            raise PoleError(f"Lambda evaluated too close to a pole: s={s}")
        a = self.scale
        t = abs(s.imag)
        sgn = 1.0 if s.imag >= 0 else -1.0
        delta = min(knobs.delta_cap, knobs.delta_num / (t + 2.0))
        phi = (math.pi / 2.0 - delta) * sgn
        w = cmath.exp(1j * phi)
        sigma_slack = 2.0 * max(abs(s.real - 0.5) - 0.5, 0.0)
        n_cut = int((t * delta + knobs.margin + sigma_slack * math.log(2.0 + t))
                    / (a * math.sin(delta))) + 2
        ns = np.arange(1, n_cut + 1, dtype=float)
        z1 = a * ns * w
        z2 = np.conj(z1)
        s2 = 1.0 - s
        log_an = np.log(a * ns)
        t1 = self._term(s, z1, log_an, log_shift)
        t2 = self._term(s2, z2, log_an, log_shift)
        r = self.coeffs(n_cut)
        total = complex(np.sum(r * (t1 + t2)))
        env = float(np.sum(np.abs(r) * (np.abs(t1) + np.abs(t2))))
        if self.has_pole:
            kap = self.pole_residue
            pole = kap * (w ** (s - 1.0) / (s - 1.0) - w ** s / s) * cmath.exp(complex(log_shift))
            total += pole
            env += abs(pole)
        return total, env

    @staticmethod
    def _term(sj: complex, zj: np.ndarray, log_an: np.ndarray,
              log_shift: complex) -> np.ndarray:
        """exp(-sj log(an) + log_shift) Gamma(sj, zj), with the Gamma factor
        folded into the exponent through loggamma whenever that is safe.

        Near a nonpositive integer sj the regularized split degenerates
        (Gamma(sj) has a pole while Gamma(sj, z) stays finite), so the
        unnormalized evaluation is used there; that corner only arises for
        small |Im s| where nothing over- or underflows.
        """
        near_int = abs(sj - round(sj.real)) < 0.3 and round(sj.real) <= 0
        if near_int:
            g = gamma_upper_unnormalized(sj, zj)
            return np.exp(-sj * log_an + log_shift) * g
        return np.exp(-sj * log_an + loggamma(sj) + log_shift) * q_regularized(sj, zj)

    def l_value(self, s: complex, knobs: EvalKnobs = DEFAULT_KNOBS) -> complex:
        """L(s) = Lambda(s) (2 pi / sqrt(D))^{s} / Gamma(s), continued."""
        s = complex(s)
        shift = s * cmath.log(self.scale) - loggamma(s)
        return self.lambda_completed(s, log_shift=shift, knobs=knobs)

    def dirichlet_sum(self, s: complex, n_max: int) -> complex:
        """Plain truncated Dirichlet sum (only sensible for Re s > 1)."""
        n = np.arange(1, n_max + 1, dtype=float)
        return complex(np.sum(self.coeffs(n_max) * n ** (-complex(s))))


class RealCombination:
    """Real-coefficient linear combination of LSeries sharing one discriminant."""

    def __init__(self, terms: list[tuple[float, LSeries]], label: str = ""):
        if not terms:
            raise ValueError("empty combination")
        discs = {L.disc for _, L in terms}
        if len(discs) != 1:
            raise ValueError("combination must share a discriminant")
        self.disc = discs.pop()
        self.terms = terms
        self.label = label or "combination"
        self.has_pole = any(L.has_pole and abs(c) > 0 for c, L in terms)

    def lambda_completed(self, s: complex, log_shift: complex = 0.0,
                         knobs: EvalKnobs = DEFAULT_KNOBS) -> complex:
        return sum(c * L.lambda_completed(s, log_shift, knobs) for c, L in self.terms)

    def lambda_with_envelope(self, s: complex, log_shift: complex = 0.0,
                             knobs: EvalKnobs = DEFAULT_KNOBS) -> tuple[complex, float]:
        total, env = 0j, 0.0
        for c, L in self.terms:
            v, e = L.lambda_with_envelope(s, log_shift, knobs)
            total += c * v
            env += abs(c) * e
        return total, env

    def l_value(self, s: complex, knobs: EvalKnobs = DEFAULT_KNOBS) -> complex:
        return sum(c * L.l_value(s, knobs) for c, L in self.terms)


# -- constructors ----------------------------------------------------------

def lseries_from_character(G: ClassGroup, psi: HeckeCharacter, label: str = "") -> LSeries:
    """Hecke L-series L_psi with coefficients from weighted ideal counts."""

    def factory(n_max):
        return G.r_psi(psi, n_max)[1:]

    return LSeries(G.disc, factory, has_pole=psi.is_principal,
                   label=label or f"L_psi{psi.exponents} (disc {G.disc})")


def lseries_from_split(split: DiscriminantSplit, label: str = "") -> LSeries:
    """L = L_{chi_d1} L_{chi_d2}; coefficients by divisor convolution (exact)."""

    def factory(n_max):
        out = np.zeros(n_max + 1, dtype=np.int64)
        c1 = split.chi1
        c2 = split.chi2
        for a in range(1, n_max + 1):
            va = c1(a)
            if va:
                b = np.arange(1, n_max // a + 1)
                out[a * b] += va * c2.table(n_max // a)[1:]
        return out[1:].astype(float)

    has_pole = split.d1 == 1 or split.d2 == 1
    return LSeries(split.disc, factory, has_pole,
                   label=label or f"L_chi({split.d1})*L_chi({split.d2})")


def lseries_from_form(form: QuadForm, label: str = "") -> LSeries:
    """Numerator series of the Epstein zeta: r_Q(n) lattice representation counts."""

    def factory(n_max):
        return form.values(n_max)[1:].astype(float)

    return LSeries(form.disc, factory, has_pole=True,
                   label=label or f"zeta_Q{(form.a, form.b, form.c)}")


def epstein_via_hecke(form: QuadForm, G: ClassGroup | None = None) -> RealCombination:
    """Epstein zeta as (eps/h) sum_j conj(psi_j(C_Q)) L_psi_j, real by pairing."""
    G = G or class_group(form.disc)
    eps = epsilon_units(form.disc)
    c_q = G.class_of_ideal_for_form(form)
    terms = []
    chars = G.characters()
    seen = set()
    for psi in chars:
        key = min(psi.exponents, tuple((-k) % G.h for k in psi.exponents))
        weight = eps / G.h * psi.value(c_q).conjugate()
        if key in seen:
            continue
        conj_exps = tuple((-k) % G.h for k in psi.exponents)
        if conj_exps != psi.exponents:
            # pair psi with its conjugate: same L-series, conjugate weights
            weight = 2.0 * weight.real
        seen.add(key)
        if abs(weight.imag) > 1e-12:
            raise AssertionError("epstein weights must be real after pairing")
        terms.append((float(weight.real), lseries_from_character(G, psi)))
    return RealCombination(terms, label=f"zeta_Q{(form.a, form.b, form.c)} via Hecke")


def epstein_direct_lattice(form: QuadForm, s: complex, radius: int = 10**4) -> tuple[complex, float]:
    """Truncated direct lattice sum of Q(n,m)^{-s} with a tail bound.

    Only for Re s > 1; returns (value, tail_bound).  The tail over Q > R is
    bounded by the integral of (lambda_min r^2)^{-sigma} outside the ellipse.
    """
    s = complex(s)
    if s.real <= 1.0:
        raise ValueError("direct lattice sum needs Re s > 1")
    counts = form.values(radius)
    n = np.arange(1, radius + 1, dtype=float)
    val = complex(np.sum(counts[1:] * n ** (-s)))
    # r_Q(n) summed over n <= u is the ellipse area ~ 2 pi u / sqrt(D); Abel
    # summation turns the tail into (2 pi / sqrt(D)) * sigma/(sigma-1) R^{1-sigma}
    sig = s.real
    tail = 2.0 * math.pi / math.sqrt(-form.disc) * sig / (sig - 1.0) * radius ** (1.0 - sig) * 2.0
    return val, tail


# -- critical-line machinery -------------------------------------------------

def hardy_z(F, t: float, wexp: float = 0.0, knobs: EvalKnobs = DEFAULT_KNOBS) -> float:
    """Lambda_F(1/2 + i t) e^{wexp t} as a real number.

    The imaginary part must vanish up to roundoff; it is checked against
    1e-9 times the evaluation scale (|value| plus the term-magnitude
    envelope, which is what roundoff is proportional to) and dropped.  The
    pointwise value alone cannot serve as the scale: it crosses zero.
    """
    val, env = F.lambda_with_envelope(complex(0.5, t), log_shift=wexp * t, knobs=knobs)
    if abs(val.imag) > 1e-9 * (abs(val) + env + 1e-300):
        raise AssertionError(
            f"hardy_z lost reality at t={t}: {val!r} "
            f"(residual {abs(val.imag)/(abs(val)+env+1e-300):.2e})")
    return val.real


def hardy_reality_residual(F, t: float, wexp: float = 0.0,
                           knobs: EvalKnobs = DEFAULT_KNOBS) -> float:
    """|Im Lambda(1/2+it)| / (|Lambda| + envelope); diagnostic for reports."""
    val, env = F.lambda_with_envelope(complex(0.5, t), log_shift=wexp * t, knobs=knobs)
    return abs(val.imag) / (abs(val) + env + 1e-300)


@dataclass
class ZeroScanResult:
    zeros: list[tuple[float, float]] = field(default_factory=list)
    windows_certified: int = 0
    t_min: float = 0.0
    t_max: float = 0.0
    max_step: float = 0.0
    n_evals: int = 0

    @property
    def count(self) -> int:
        return len(self.zeros)


def _grid_step(t: float, minus_d: int) -> float:
    return math.pi / (4.0 * math.log(max(t, 0.0) * math.sqrt(-minus_d) / (2 * math.pi) + 4.0))


def scan_zeros(F, t1: float, t2: float, refine_width: float = 1e-8,
               step_scale: float = 1.0, knobs: EvalKnobs = DEFAULT_KNOBS) -> ZeroScanResult:
    """Sign-change scan of the real function Lambda_F(1/2 + i t) on [t1, t2].

    Grid step at height t is step_scale * pi / (4 log(t sqrt(D)/(2 pi) + 4));
    each change is bisected to the requested width.  Only odd-order zeros
    with a verified bracketing sign change are reported.
    """
    if not t1 < t2:
        raise ValueError("need t1 < t2")
    wexp = math.pi / 2.0 - 1.0 / max(abs(t1), abs(t2), 10.0)
    res = ZeroScanResult(t_min=t1, t_max=t2)
    evals = 0

    def z(t):
        nonlocal evals
        evals += 1
        return hardy_z(F, t, wexp=wexp, knobs=knobs)

    t_prev = t1
    v_prev = z(t_prev)
    max_step = 0.0
    while t_prev < t2:
        step = step_scale * _grid_step(abs(t_prev), F.disc)
        max_step = max(max_step, step)
        t_next = min(t_prev + step, t2)
        v_next = z(t_next)
        if v_prev == 0.0:
            v_prev = 1e-300  # treat exact zero on grid as positive side marker
        if v_next != 0.0 and (v_prev < 0) != (v_next < 0):
            lo, hi = t_prev, t_next
            vlo = v_prev
            while hi - lo > refine_width:
                mid = 0.5 * (lo + hi)
                vm = z(mid)
                if vm == 0.0:
                    lo, hi = mid - 0.25 * refine_width, mid + 0.25 * refine_width
                    break
                if (vm < 0) == (vlo < 0):
                    lo, vlo = mid, vm
                else:
                    hi = mid
            res.zeros.append((0.5 * (lo + hi), hi - lo))
        t_prev, v_prev = t_next, v_next
    res.max_step = max_step
    res.n_evals = evals
    return res


def window_test(F, t: float, H: float, mollifier=None, T_param: float = 100.0,
                quad_rel_tol: float = 1e-6, knobs: EvalKnobs = DEFAULT_KNOBS) -> dict:
    """Sign-change certificate on (t, t+H):

      I = int F(u) |eta(1/2+iu)|^2 exp((pi/2 - 1/T) u) du,
      J = same integrand in absolute value,

    with F(u) = Lambda_F(1/2 + i u); eta = 1 when no mollifier is given.
    certified means J > |I| (1 + 10 * quad_rel_tol), which forces an odd-order
    zero of the real integrand inside the window.
    """
    if H <= 0:
        raise ValueError("need H > 0")
    wexp = math.pi / 2.0 - 1.0 / T_param
    base = wexp * t  # pulled out of the integrand to keep values O(1)

    if mollifier is not None:
        def integrand(u):
            eta = mollifier.eta(complex(0.5, u))
            return hardy_z(F, u, 0.0, knobs=knobs) * abs(eta) ** 2 * math.exp(wexp * u - base)
    else:
        def integrand(u):
            return hardy_z(F, u, 0.0, knobs=knobs) * math.exp(wexp * u - base)

    # split at interior odd-order zeros so |f| is piecewise smooth
    interior = [zt for zt, _ in scan_zeros(F, t, t + H, knobs=knobs).zeros if t < zt < t + H]
    cuts = [t] + interior + [t + H]
    pieces = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        pieces.append(_gauss_adaptive(integrand, lo, hi, quad_rel_tol))
    total_i = sum(pieces)
    total_j = sum(abs(p) for p in pieces)
    certified = total_j > abs(total_i) * (1.0 + 10.0 * quad_rel_tol)
    scale = math.exp(base)
    return {
        "I": total_i * scale,
        "J": total_j * scale,
        "I_scaled": total_i,
        "J_scaled": total_j,
        "log_scale": base,
        "certified": bool(certified),
        "zeros_found": len(interior),
    }


def _gauss_adaptive(f, lo: float, hi: float, rel_tol: float, max_depth: int = 12) -> float:
    """Adaptive Gauss-Legendre on [lo, hi] by interval halving."""
    nodes, weights = np.polynomial.legendre.leggauss(16)

    def gl(a, b):
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        return half * sum(w * f(mid + half * x) for x, w in zip(nodes, weights))

    def rec(a, b, whole, depth):
        mid = 0.5 * (a + b)
        left, right = gl(a, mid), gl(mid, b)
        if depth >= max_depth or abs(left + right - whole) <= rel_tol * (abs(whole) + 1e-12):
            return left + right
        return rec(a, mid, left, depth + 1) + rec(mid, b, right, depth + 1)

    if hi - lo < 1e-13:
        return 0.0
    return rec(lo, hi, gl(lo, hi), 0)
