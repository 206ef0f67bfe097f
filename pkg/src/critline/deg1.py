"""Degree-1 critical-line machinery: completed Riemann zeta and real Dirichlet
L-functions evaluated through the Euler-Maclaurin route, with their own zero
scans.  Serves as an independent oracle for the degree-2 engine (a product of
two degree-1 functions must reproduce the merged zero lists).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.special import loggamma

from .dirchar import RealCharacter, l_chi


def completed_deg1(d: int, s: complex) -> tuple[complex, float]:
    """Completed function of chi_d: (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi_d)
    with a = 0 for even, 1 for odd characters; real on the critical line and
    symmetric under s -> 1-s (root number +1 for real primitive characters).
    Returns (value, prefactor magnitude) so callers can judge roundoff."""
    s = complex(s)
    chi = RealCharacter(d)
    a = 1 if chi.is_odd else 0
    q = chi.modulus
    import cmath

    pref = cmath.exp(0.5 * (s + a) * math.log(q / math.pi) + loggamma(0.5 * (s + a)))
    return pref * l_chi(chi, s), abs(pref)


def hardy_deg1(d: int, t: float) -> float:
    """Real value of the completed chi_d function at 1/2 + i t.

    The imaginary part is checked against the gamma-prefactor magnitude
    (the scale roundoff is proportional to; the value itself crosses zero)."""
    val, scale = completed_deg1(d, complex(0.5, t))
    if abs(val.imag) > 1e-7 * abs(val) + 1e-12 * scale:
        raise AssertionError(f"degree-1 completed function not real at t={t}: {val}")
    return val.real


@dataclass
class Deg1Scan:
    disc: int
    zeros: list[tuple[float, float]] = field(default_factory=list)


def scan_zeros_deg1(d: int, t1: float, t2: float, step: float = 0.05,
                    refine_width: float = 1e-9) -> Deg1Scan:
    """Sign-change scan of the completed chi_d function on [t1, t2]."""
    out = Deg1Scan(disc=d)
    t = t1
    v = hardy_deg1(d, t) if t > 0 else hardy_deg1(d, t + 1e-9)
    while t < t2:
        t_next = min(t + step, t2)
        v_next = hardy_deg1(d, t_next)
        if v != 0.0 and v_next != 0.0 and (v < 0) != (v_next < 0):
            lo, hi, vlo = t, t_next, v
            while hi - lo > refine_width:
                mid = 0.5 * (lo + hi)
                vm = hardy_deg1(d, mid)
                if vm == 0.0:
                    lo, hi = mid - 0.25 * refine_width, mid + 0.25 * refine_width
                    break
                if (vm < 0) == (vlo < 0):
                    lo, vlo = mid, vm
                else:
                    hi = mid
            out.zeros.append((0.5 * (lo + hi), hi - lo))
        t, v = t_next, v_next
    return out
