"""Arithmetic of imaginary quadratic fields via binary quadratic forms.

Reduction and Gauss composition of positive definite forms, the form class
group of a fundamental discriminant, its character group, and the coefficient
sequences obtained by weighting ideal counts with a character.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import factorize
from .dirchar import is_fundamental, kronecker


def epsilon_units(minus_d: int) -> int:
    """Number of units in the order of discriminant -D: 6, 4 or 2."""
    if minus_d == -3:
        return 6
    if minus_d == -4:
        return 4
    return 2


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class QuadForm:
    """Positive definite integral binary quadratic form a x^2 + b x y + c y^2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __post_init__(self):
        if self.a <= 0 or self.disc >= 0:
            raise ValueError(f"form {(self.a, self.b, self.c)} is not positive definite")

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (-a < b <= a <= c):
            return False
        if (a == c or a == abs(b)) and b < 0:
            return False
        return True

    def normalized(self) -> "QuadForm":
        a, b, c = self.a, self.b, self.c
        if -a < b <= a:
            return self
        r = (a - b) // (2 * a)
        return QuadForm(a, b + 2 * r * a, a * r * r + b * r + c)

    def reduced(self) -> "QuadForm":
        f = self.normalized()
        a, b, c = f.a, f.b, f.c
        while a > c or (a == c and b < 0):
            s = (c + b) // (2 * c)
            a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
        if a == abs(b) and b < 0:
            b = -b
        return QuadForm(a, b, c)

    def inverse(self) -> "QuadForm":
        return QuadForm(self.a, -self.b, self.c).reduced()

    def compose(self, other: "QuadForm") -> "QuadForm":
        """Gauss composition; result is reduced."""
        if self.disc != other.disc:
            raise ValueError("forms must share a discriminant")
        a1, b1, c1 = self.a, self.b, self.c
        a2, b2, c2 = other.a, other.b, other.c
        g = (b1 + b2) // 2
        h = (b2 - b1) // 2
        w, _, _ = _ext_gcd(math.gcd(a1, a2), g)
        j = w
        s = a1 // w
        t = a2 // w
        u = g // w
        # solve t u k = h u + s c1 (mod s t), then refine mod s
        k_t, v = _solve_linmod(t * u, h * u + s * c1, s * t)
        n, _ = _solve_linmod(t * v, h - t * k_t, s)
        k = k_t + v * n
        l = (k * t - h) // s
        m = (t * u * k - h * u - c1 * s) // (s * t)
        a3 = s * t
        b3 = j * u - (k * t + l * s)
        c3 = k * l - j * m
        return QuadForm(a3, b3, c3).reduced()

    def values(self, n_max: int) -> np.ndarray:
        """Representation counts r_Q(n) = #{(x,y) : Q(x,y) = n} for 0 <= n <= n_max."""
        a, b, c = self.a, self.b, self.c
        D = -self.disc
        counts = np.zeros(n_max + 1, dtype=np.int64)
        ymax = math.isqrt(4 * a * n_max // D) + 1
        for y in range(-ymax, ymax + 1):
            # a x^2 + (b y) x + (c y^2 - n) = 0 ; scan x range where Q <= n_max
            # Q(x, y) = a (x + b y / 2a)^2 + D y^2 / (4 a)
            rem = n_max - D * y * y / (4 * a)
            if rem < 0:
                continue
            half = math.sqrt(rem / a)
            x_lo = math.floor(-b * y / (2 * a) - half) - 1
            x_hi = math.ceil(-b * y / (2 * a) + half) + 1
            x = np.arange(x_lo, x_hi + 1)
            q = a * x * x + b * x * y + c * y * y
            ok = (q >= 0) & (q <= n_max)
            np.add.at(counts, q[ok], 1)
        counts[0] = 0  # (0, 0) excluded
        return counts


def reduce_form(f: QuadForm) -> QuadForm:
    return f.reduced()


def _solve_linmod(a: int, b: int, m: int):
    """Solutions of a x = b (mod m) as x = u + v k; returns (u, v)."""
    g, d, _ = _ext_gcd(a, m)
    if b % g != 0:
        raise ValueError("no solution")
    u = (b // g) * d % m
    v = m // g
    return u, v


@dataclass(frozen=True)
class HeckeCharacter:
    """Character of the form class group, stored as exponents k_j with
    psi(C_j) = exp(2 pi i k_j / h)."""

    exponents: tuple[int, ...]
    h: int

    @property
    def is_principal(self) -> bool:
        return all(k == 0 for k in self.exponents)

    @property
    def is_real(self) -> bool:
        return all((2 * k) % self.h == 0 for k in self.exponents)

    def value(self, class_index: int) -> complex:
        k = self.exponents[class_index]
        return np.exp(2j * np.pi * k / self.h)

    def real_value(self, class_index: int) -> int:
        """+-1 value for a real character."""
        if not self.is_real:
            raise ValueError("character is not real")
        return 1 if self.exponents[class_index] == 0 else -1

    def rational_value(self, class_index: int) -> Fraction | None:
        """Exact cos(2 pi k / h) as a Fraction when it is rational, else None.

        The real part is the right weight for coefficient tables: conjugate
        classes carry equal ideal counts, so the imaginary parts cancel.
        """
        k = self.exponents[class_index] % self.h
        # angle as a multiple of pi: 2k/h, reduced
        num, den = (2 * k) % (2 * self.h), self.h
        g = math.gcd(num, den)
        num, den = num // g, den // g
        # cos(pi * num / den) rational only for den in {1, 2, 3}
        table = {
            (0, 1): Fraction(1),
            (1, 1): Fraction(-1),
            (1, 2): Fraction(0),
            (3, 2): Fraction(0),
            (1, 3): Fraction(1, 2),
            (2, 3): Fraction(-1, 2),
            (4, 3): Fraction(-1, 2),
            (5, 3): Fraction(1, 2),
        }
        return table.get((num % (2 * den), den))


class ClassGroup:
    """Form class group of a fundamental discriminant -D."""

    def __init__(self, minus_d: int):
        if minus_d >= 0 or not is_fundamental(minus_d):
            raise ValueError("need a negative fundamental discriminant")
        self.disc = minus_d
        self.forms = _reduced_forms(minus_d)
        self.h = len(self.forms)
        self._index = {f: i for i, f in enumerate(self.forms)}
        self.identity_index = self._index[_principal_form(minus_d)]
        self.table = [
            [self._index[self.forms[i].compose(self.forms[j])] for j in range(self.h)]
            for i in range(self.h)
        ]

    def index_of(self, f: QuadForm) -> int:
        g = f.reduced()
        if g not in self._index:
            raise ValueError(f"form {g} does not have discriminant {self.disc}")
        return self._index[g]

    def compose(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse_index(self, i: int) -> int:
        return self._index[self.forms[i].inverse()]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity_index:
            cur = self.table[cur][i]
            k += 1
        return k

    def characters(self) -> list[HeckeCharacter]:
        """The full dual group, principal character first.

        A character assigns to each class an exponent k with value
        exp(2 pi i k / h); candidate exponents on a generating set are
        propagated through the composition table and kept only when globally
        consistent, which is correct for any abelian table.
        """
        gens, orders = _abelian_basis(self.table, self.identity_index)
        h = self.h
        chars = []
        for tup in _mixed_radix(orders):
            exps = _propagate_exponents(
                self.table, self.identity_index, gens,
                [t * (h // o) for t, o in zip(tup, orders)], h,
            )
            if exps is not None:
                chars.append(HeckeCharacter(tuple(exps), h))
        seen = set()
        chars = [c for c in chars if not (c.exponents in seen or seen.add(c.exponents))]
        if len(chars) != h:
            raise AssertionError("dual group has wrong size")
        principal = [c for c in chars if c.is_principal]
        rest = sorted(
            (c for c in chars if not c.is_principal),
            key=lambda c: (min(k for k in c.exponents if k), c.exponents),
        )
        return principal + rest

    def r_psi(self, psi: HeckeCharacter, n_max: int, exact: bool = False):
        """Coefficients r_psi(n) = sum over classes psi(C) * (#ideals of norm n in C).

        Ideal counts per class are computed as lattice representation counts of
        the class form divided by the unit count.  Returns a float array by
        default; with exact=True returns a list of Fractions (requires the
        character values to be rational, true for h in {1, 2, 3, 4, 6}).
        """
        counts = self.ideal_counts(n_max)
        if exact:
            vals = [psi.rational_value(i) for i in range(self.h)]
            if any(v is None for v in vals):
                raise ValueError("character values are irrational; use exact=False")
            out = [Fraction(0)] * (n_max + 1)
            for i, v in enumerate(vals):
                if v:
                    for n in range(n_max + 1):
                        if counts[i][n]:
                            out[n] += v * counts[i][n]
            return out
        vals = np.array([psi.value(i) for i in range(self.h)])
        table = (vals[:, None] * counts).sum(axis=0)
        res = np.real(table)
        if np.max(np.abs(np.imag(table))) > 1e-9:
            raise AssertionError("r_psi table has a nonreal entry")
        return res

    def ideal_counts(self, n_max: int) -> np.ndarray:
        """Matrix N[i, n] = number of ideals of norm n in class i (exact ints)."""
        key = n_max
        cached = self._ideal_cache.get(key) if hasattr(self, "_ideal_cache") else None
        if cached is not None:
            return cached
        eps = epsilon_units(self.disc)
        mat = np.zeros((self.h, n_max + 1), dtype=np.int64)
        for i, f in enumerate(self.forms):
            reps = f.values(n_max)
            if np.any(reps % eps != 0):
                raise AssertionError("representation counts not divisible by unit count")
            mat[i] = reps // eps
        if not hasattr(self, "_ideal_cache"):
            self._ideal_cache = {}
        self._ideal_cache[key] = mat
        return mat

    def class_of_ideal_for_form(self, f: QuadForm) -> int:
        """Class index whose ideal counts are the representation counts of f."""
        return self.index_of(f)


def _principal_form(minus_d: int) -> QuadForm:
    if minus_d % 4 == 0:
        return QuadForm(1, 0, -minus_d // 4)
    return QuadForm(1, 1, (1 - minus_d) // 4)


def _reduced_forms(minus_d: int) -> list[QuadForm]:
    forms = []
    d = -minus_d
    b = minus_d % 2
    while b * b <= d // 3:
        rhs = (b * b + d) // 4
        a = max(b, 1)
        while a * a <= rhs:
            if a != 0 and rhs % a == 0:
                c = rhs // a
                f = QuadForm(a, b, c)
                if f.is_reduced():
                    forms.append(f)
                    if 0 < b < a < c:
                        forms.append(QuadForm(a, -b, c))
            a += 1
        b += 2
    return sorted(forms, key=lambda f: (f.a, -f.b, f.c))


def _abelian_basis(table, identity):
    """Generators and orders of a finite abelian group given by its table."""
    h = len(table)
    if h == 1:
        return [], []

    def order(i):
        k, cur = 1, i
        while cur != identity:
            cur = table[cur][i]
            k += 1
        return k

    def power(i, e):
        cur, base, k = identity, i, e
        while k > 0:
            if k & 1:
                cur = table[cur][base]
            base = table[base][base]
            k >>= 1
        return cur

    gens, orders = [], []
    generated = {identity}
    while len(generated) < h:
        best = max((i for i in range(h) if i not in generated), key=order)
        gens.append(best)
        orders.append(order(best))
        new = set()
        for g in generated:
            cur = g
            for _ in range(orders[-1]):
                new.add(cur)
                cur = table[cur][best]
        generated |= new
    return gens, orders


def _propagate_exponents(table, identity, gens, gen_exps, h):
    """Extend exponents on generators to the whole group; None if inconsistent."""
    n = len(table)
    exps = [None] * n
    exps[identity] = 0
    frontier = [identity]
    while frontier:
        nxt = []
        for el in frontier:
            for g, ke in zip(gens, gen_exps):
                other = table[el][g]
                cand = (exps[el] + ke) % h
                if exps[other] is None:
                    exps[other] = cand
                    nxt.append(other)
                elif exps[other] != cand:
                    return None
        frontier = nxt
    if any(e is None for e in exps):
        return None
    for i in range(n):
        for j in range(n):
            if (exps[i] + exps[j]) % h != exps[table[i][j]]:
                return None
    return exps


def _mixed_radix(orders):
    if not orders:
        yield ()
        return
    head, rest = orders[0], orders[1:]
    for k in range(head):
        for tail in _mixed_radix(rest):
            yield (k,) + tail


@lru_cache(maxsize=None)
def class_group(minus_d: int) -> ClassGroup:
    return ClassGroup(minus_d)


def chi_d_divisor_sum(minus_d: int, n_max: int) -> np.ndarray:
    """r_{psi_0}(n) oracle: sum_{d | n} chi_D(d), exact integers."""
    out = np.zeros(n_max + 1, dtype=np.int64)
    for d in range(1, n_max + 1):
        c = kronecker(minus_d, d)
        if c:
            out[d::d] += c
    return out


def hecke_euler_factor_coeffs(r_p: float, chi_d_p: int, k_max: int) -> list[float]:
    """Coefficients of (1 - r(p) T + chi_D(p) T^2)^{-1} up to T^k_max."""
    out = [1.0, r_p]
    for k in range(2, k_max + 1):
        out.append(r_p * out[k - 1] - chi_d_p * out[k - 2])
    return out[: k_max + 1]
