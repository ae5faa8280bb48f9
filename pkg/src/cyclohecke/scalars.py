"""
Exact cyclotomic arithmetic.

Scalars are elements of the cyclotomic field Q(zeta_N), stored as coordinate
vectors over the power basis 1, zeta, ..., zeta^(phi(N)-1) with Fraction
coordinates.  The representation is canonical: two equal field elements have
identical stored data (rational values are always demoted to conductor 1, so
hashing is stable across mixed-origin inputs as long as a computation keeps a
fixed ambient conductor, which the catalog loader enforces).

Square roots of rational integers that the models need (sqrt(5), sqrt(-7))
are realized as quadratic Gauss sums, never as floating point.

>>> z = zeta(3)
>>> z * z * z
Cyc(1)
>>> (z + z.conjugate()).is_rational()
True
>>> gauss_sum(7) ** 2
Cyc(-7)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rat = Fraction

__all__ = [
    "Cyc",
    "Rat",
    "zeta",
    "gauss_sum",
    "cyclotomic_polynomial",
    "euler_phi",
]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficient tuple (low to high) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert r == [0], f"cyclotomic division failed for n={n}, d={d}"
            poly = q
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows expressing zeta^k (k = 0 .. 2*phi-2) over the power basis."""
    phi = euler_phi(n)
    rel = cyclotomic_polynomial(n)  # monic of degree phi
    rows: list[tuple[Fraction, ...]] = []
    for k in range(phi):
        row = [Fraction(0)] * phi
        row[k] = Fraction(1)
        rows.append(tuple(row))
    for k in range(phi, 2 * phi - 1):
        prev = list(rows[k - 1])
        # multiply by zeta: shift, then reduce the overflow via the relation
        top = prev[phi - 1]
        shifted = [Fraction(0)] + prev[: phi - 1]
        if top:
            for i in range(phi):
                shifted[i] -= top * rel[i]
        rows.append(tuple(shifted))
    return tuple(rows)


@lru_cache(maxsize=None)
def _zeta_power_coords(n: int, k: int) -> tuple[Fraction, ...]:
    """Power-basis coordinates of zeta_n^k, 0 <= k < n."""
    phi = euler_phi(n)
    if k < phi:
        row = [Fraction(0)] * phi
        row[k] = Fraction(1)
        return tuple(row)
    rel = cyclotomic_polynomial(n)
    prev = list(_zeta_power_coords(n, k - 1))
    top = prev[phi - 1]
    out = [Fraction(0)] + prev[: phi - 1]
    if top:
        for i in range(phi):
            out[i] -= top * rel[i]
    return tuple(out)


class Cyc:
    """An element of Q(zeta_N), exact and hashable."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        phi = euler_phi(n)
        coeffs = tuple(coeffs)
        assert len(coeffs) == phi
        if n > 1 and all(c == 0 for c in coeffs[1:]):
            n, coeffs = 1, (coeffs[0],)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction -------------------------------------------------

    @staticmethod
    def rational(value) -> "Cyc":
        return Cyc(1, (Fraction(value),))

    @staticmethod
    def root_of_unity(n: int, power: int = 1) -> "Cyc":
        return Cyc(n, _zeta_power_coords(n, power % n))

    def __setattr__(self, *args):
        raise AttributeError("Cyc is immutable")

    # -- conductor handling -------------------------------------------

    def _lift(self, m: int) -> list:
        """Raw coordinate list of self over the power basis of Q(zeta_m)."""
        phi = euler_phi(m)
        out = [Fraction(0)] * phi
        if self.n == 1:
            out[0] = self.coeffs[0]
            return out
        step = m // self.n
        for k, c in enumerate(self.coeffs):
            if c:
                row = _zeta_power_coords(m, (k * step) % m)
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return out

    def promote(self, m: int) -> "Cyc":
        """Rewrite self in Q(zeta_m); m must be a multiple of self.n."""
        if m == self.n:
            return self
        assert m % self.n == 0
        return Cyc(m, self._lift(m))

    @staticmethod
    def _common(a: "Cyc", b: "Cyc"):
        if a.n == b.n:
            return a.n, list(a.coeffs), list(b.coeffs)
        m = a.n * b.n // gcd(a.n, b.n)
        return m, a._lift(m), b._lift(m)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n, a, b = Cyc._common(self, other)
        return Cyc(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1:
            c = self.coeffs[0]
            return Cyc(other.n, tuple(c * y for y in other.coeffs))
        if other.n == 1:
            c = other.coeffs[0]
            return Cyc(self.n, tuple(c * x for x in self.coeffs))
        n, a, b = Cyc._common(self, other)
        phi = len(a)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        rows = _reduction_rows(n)
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = rows[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyc(n, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.n == 1:
            return Cyc(1, (1 / self.coeffs[0],))
        # extended Euclid in Q[x] against the cyclotomic relation
        rel = list(cyclotomic_polynomial(self.n))
        a = list(self.coeffs)
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        r0, r1 = rel, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t0 = [Fraction(1)]
        t1 = [Fraction(0)]
        while any(c != 0 for c in r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        # r0 is the gcd, a nonzero constant since the relation is irreducible
        assert len(r0) == 1 and r0[0] != 0, "element not invertible mod Phi_n"
        inv = [c / r0[0] for c in s0]
        phi = euler_phi(self.n)
        inv = inv[:phi] + [Fraction(0)] * max(0, phi - len(inv))
        return Cyc(self.n, inv)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- Galois --------------------------------------------------------

    def galois(self, k: int) -> "Cyc":
        """Apply zeta -> zeta^k; requires gcd(k, n) = 1."""
        if self.n == 1:
            return self
        assert gcd(k, self.n) == 1
        phi = euler_phi(self.n)
        out = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = _zeta_power_coords(self.n, (i * k) % self.n)
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return Cyc(self.n, out)

    def conjugate(self) -> "Cyc":
        """Complex conjugation, zeta -> zeta^(-1)."""
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return self.n == 1

    def as_rational(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_root_of_unity_times_sign(self) -> bool:
        """True iff self is +-zeta^k, the units relevant to monomial tests."""
        return self in _unit_constants(self.n)

    # -- plumbing ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            return self.coeffs == other.coeffs
        _, a, b = Cyc._common(self, other)
        return a == b

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def key(self):
        return (self.n, self.coeffs)

    def __repr__(self):
        if self.n == 1:
            c = self.coeffs[0]
            return f"Cyc({c.numerator})" if c.denominator == 1 else f"Cyc({c})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*z{self.n}^{i}" if i else f"{c}")
        return "Cyc(" + (" + ".join(parts) or "0") + ")"


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _coerce(value):
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc.rational(value)
    return NotImplemented


@lru_cache(maxsize=None)
def _unit_constants(n: int) -> frozenset:
    out = set()
    for k in range(n):
        z = Cyc.root_of_unity(n, k)
        out.add(z)
        out.add(-z)
    return frozenset(out)


def zeta(n: int, power: int = 1) -> Cyc:
    """The root of unity exp(2*pi*i*power/n), exactly."""
    return Cyc.root_of_unity(n, power)


def gauss_sum(p: int) -> Cyc:
    """
    Quadratic Gauss sum sum_a legendre(a, p) * zeta_p^a for an odd prime p.

    Its square is p when p = 1 mod 4 and -p when p = 3 mod 4, so this pins
    one exact square root of +-p inside the conductor-p field.
    """
    total = Cyc.rational(0)
    for a in range(1, p):
        legendre = pow(a, (p - 1) // 2, p)
        sign = 1 if legendre == 1 else -1
        total = total + zeta(p, a) * sign
    return total
