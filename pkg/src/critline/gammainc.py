"""Regularized upper incomplete gamma Q(s, z) = Gamma(s, z)/Gamma(s) for
complex s and vectors of complex z in the right half-plane.

Power series (Kummer form) below the transition |z| ~ |s|, Lentz continued
fraction above it, and an upward recurrence lift when Re s is too small for
the series.  Relative accuracy is around 1e-13 over the ranges exercised by
the L-function evaluator (|Im s| <= 300, |Re s| <= 5, z on rays with argument
within pi/2 of the positive axis).
"""
from __future__ import annotations

import numpy as np
from scipy.special import loggamma

_TINY = 1e-300
_MAX_ITER = 6000


def q_series(s: complex, z: np.ndarray, tol: float = 1e-16) -> np.ndarray:
    """Q = 1 - P with P(s,z) = z^s e^{-z} M(1, s+1, z) / Gamma(s+1); needs Re s > 0."""
    term = np.ones_like(z)
    acc = np.ones_like(z)
    for k in range(1, _MAX_ITER + 1):
        term = term * z / (s + k)
        acc += term
        if np.max(np.abs(term)) < tol * np.max(np.abs(acc)):
            break
    pref = np.exp(-z + s * np.log(z) - loggamma(s + 1))
    return 1.0 - pref * acc


def q_contfrac(s: complex, z: np.ndarray, tol: float = 1e-15) -> np.ndarray:
    """Modified Lentz continued fraction for Q(s, z); good for |z| >~ |s|."""
    b = z + 1.0 - s
    c = np.full_like(z, 1e300)
    d = np.where(np.abs(b) > _TINY, 1.0 / np.where(b == 0, 1.0, b), 1e300)
    h = d.copy()
    for k in range(1, _MAX_ITER + 1):
        an = -k * (k - s)
        b = b + 2.0
        d = an * d + b
        d = np.where(np.abs(d) < _TINY, _TINY, d)
        c = b + an / c
        c = np.where(np.abs(c) < _TINY, _TINY, c)
        d = 1.0 / d
        delta = c * d
        h = h * delta
        if np.max(np.abs(delta - 1.0)) < tol:
            break
    return np.exp(-z + s * np.log(z) - loggamma(s)) * h


_EULER_GAMMA = 0.5772156649015329


def gamma_upper_unnormalized(s: complex, z: np.ndarray) -> np.ndarray:
    """Gamma(s, z) itself (no 1/Gamma(s) normalization), valid for any s
    including nonpositive integers, where the regularized form degenerates.

    Intended for moderate |s|, |z| (the small-|Im s| corner); large-|Im s|
    work should go through q_regularized with log-folded prefactors.
    """
    s = complex(s)
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    cut = 0.75 * abs(s) + 6.0
    hi = np.abs(z) >= cut
    if hi.any():
        # the continued fraction never needs Gamma(s)
        out[hi] = _gamma_cf_raw(s, z[hi])
    lo = ~hi
    if lo.any():
        m_near = round(s.real)
        if abs(s - m_near) < 1e-12 and m_near <= 0:
            out[lo] = _gamma_upper_nonpos_int(-int(m_near), z[lo])
        else:
            k = 0
            while s.real + k < 0.5:
                k += 1
            g = np.exp(loggamma(s + k)) * q_regularized(s + k, z[lo])
            for j in range(k - 1, -1, -1):
                g = (g - np.exp(-z[lo] + (s + j) * np.log(z[lo]))) / (s + j)
            out[lo] = g
    return out


def _gamma_cf_raw(s: complex, z: np.ndarray, tol: float = 1e-15) -> np.ndarray:
    b = z + 1.0 - s
    c = np.full_like(z, 1e300)
    d = np.where(np.abs(b) > _TINY, 1.0 / np.where(b == 0, 1.0, b), 1e300)
    h = d.copy()
    for k in range(1, _MAX_ITER + 1):
        an = -k * (k - s)
        b = b + 2.0
        d = an * d + b
        d = np.where(np.abs(d) < _TINY, _TINY, d)
        c = b + an / c
        c = np.where(np.abs(c) < _TINY, _TINY, c)
        d = 1.0 / d
        delta = c * d
        h = h * delta
        if np.max(np.abs(delta - 1.0)) < tol:
            break
    return np.exp(-z + s * np.log(z)) * h


def _gamma_upper_nonpos_int(m: int, z: np.ndarray) -> np.ndarray:
    """Gamma(-m, z) for m >= 0 via E1 and downward recurrence."""
    # Gamma(0, z) = E1(z) = -gamma - log z + sum (-1)^{k+1} z^k / (k k!)
    acc = -_EULER_GAMMA - np.log(z)
    term = np.ones_like(z)
    for k in range(1, 300):
        term = term * (-z) / k
        acc -= term / k
        if np.max(np.abs(term)) < 1e-18:
            break
    g = acc
    for j in range(1, m + 1):
        g = (g - np.exp(-z - j * np.log(z))) / (-j)
    return g


def q_regularized(s: complex, z: np.ndarray) -> np.ndarray:
    """Q(s, z) elementwise over z (complex array), automatic method choice."""
    s = complex(s)
    z = np.asarray(z, dtype=complex)
    # lift small/negative Re s so the series representation is safe
    lift = 0
    while s.real + lift < 0.5:
        lift += 1
    if lift:
        q = q_regularized(s + lift, z)
        # Q(s,z) = Q(s+1,z) - e^{-z} z^s / Gamma(s+1), iterated
        for j in range(lift - 1, -1, -1):
            sj = s + j
            if abs(sj + 1 - round((sj + 1).real)) < 1e-14 and (sj + 1).real <= 0:
                continue  # 1/Gamma at a nonpositive integer is exactly zero
            q = q - np.exp(-z + sj * np.log(z) - loggamma(sj + 1))
        return q
    out = np.empty_like(z)
    cut = 0.75 * abs(s) + 4.0
    low = np.abs(z) < cut
    if low.any():
        out[low] = q_series(s, z[low])
    if (~low).any():
        out[~low] = q_contfrac(s, z[~low])
    return out
