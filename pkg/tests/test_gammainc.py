import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from critline.gammainc import gamma_upper_unnormalized, q_regularized

mp.mp.dps = 30


def _ref_q(s, z):
    return complex(mp.gammainc(mp.mpc(s), mp.mpc(z), mp.inf, regularized=True))


def _ref_gamma(s, z):
    return complex(mp.gammainc(mp.mpc(s), mp.mpc(z), mp.inf, regularized=False))


@pytest.mark.parametrize("t", [0.0, 1.0, 20.0, 100.0, 250.0])
@pytest.mark.parametrize("sigma", [0.2, 0.5, 0.8, 1.5])
def test_q_regularized_on_rotated_ray(sigma, t):
    s = complex(sigma, t)
    delta = min(0.9, 8.0 / (t + 2.0))
    phi = math.pi / 2 - delta
    xs = np.geomspace(0.2, 2.5 * abs(s) + 40, 18)
    z = xs * cmath.exp(1j * phi)
    q = q_regularized(s, z)
    for x, mine in zip(xs, q):
        ref = _ref_q(s, complex(x * cmath.exp(1j * phi)))
        assert abs(mine - ref) <= 1e-10 * max(abs(ref), 1e-8)


def test_q_negative_real_part_via_lift():
    for s in (-0.5 + 3j, -1.7 + 0.2j, -2.5 + 0j):
        z = np.array([0.8 + 0.4j, 3.0 + 1.0j, 12.0 + 5.0j])
        q = q_regularized(s, z)
        for zz, mine in zip(z, q):
            ref = _ref_q(s, complex(zz))
            assert abs(mine - ref) <= 1e-10 * max(abs(ref), 1e-10)


def test_gamma_upper_at_nonpositive_integers():
    for m in (0, 1, 2):
        s = -float(m)
        z = np.array([0.5 + 0.2j, 2.0 + 1.0j, 9.0 + 0.5j])
        g = gamma_upper_unnormalized(s, z)
        for zz, mine in zip(z, g):
            ref = _ref_gamma(s, complex(zz))
            assert abs(mine - ref) <= 1e-11 * max(abs(ref), 1e-12), (m, zz)


def test_gamma_upper_generic_matches_regularized():
    s = 1.3 + 0.7j
    z = np.array([0.5 + 0.1j, 4.0 + 2.0j])
    from scipy.special import gamma as gamma_fn

    g = gamma_upper_unnormalized(s, z)
    q = q_regularized(s, z)
    import scipy.special as sps

    full = cmath.exp(sps.loggamma(s))
    assert np.allclose(g, q * full, rtol=1e-11)
