"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, x, ..., x^(phi(N)-1) modulo the
N-th cyclotomic polynomial, as an integer coefficient vector with a single
positive common denominator.  This gives canonical forms (equality is
coefficient-wise), exact multiplication in O(phi(N)^2) integer operations,
and cheap hashing, which is what the matrix-group closure leans on.

Signs of real elements are decided exactly: an exact-zero shortcut via the
normal form, then adaptive-precision evaluation of the distinguished
embedding zeta = exp(2*pi*i/N) until the sign interval excludes zero.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

from .residues import euler_phi


# ---------------------------------------------------------------------------
# integer polynomial plumbing


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials, denominator monic; remainder must vanish."""
    assert den[-1] == 1
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        out[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] -= coeff * d
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("level must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _level_context(n: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """(degree, rows) where rows[e] = coefficients of x^(degree+e) mod Phi_n.

    Rows cover exponents up to max(2*degree - 2, n - 1): enough for products
    of reduced elements and for Galois exponent images.
    """
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    top = max(2 * deg - 2, n - 1)
    rows: list[tuple[int, ...]] = []
    # x^deg = -(phi_0 + phi_1 x + ... + phi_{deg-1} x^{deg-1})
    current = [-c for c in phi[:deg]]
    for _ in range(deg, top + 1):
        rows.append(tuple(current))
        lead = current[-1]
        current = [0] + current[:-1]
        if lead:
            for i in range(deg):
                current[i] -= lead * phi[i]
    return deg, tuple(rows)


def _reduce_exponents(n: int, raw: list[int]) -> list[int]:
    """Fold coefficients at exponents >= phi(n) back into the power basis."""
    deg, rows = _level_context(n)
    out = raw[:deg] + [0] * max(0, deg - len(raw))
    for e in range(deg, len(raw)):
        c = raw[e]
        if c:
            row = rows[e - deg]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return out


class CyclotomicNumber:
    """An element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("level", "num", "den", "_hash")

    def __init__(self, level: int, num: tuple[int, ...], den: int = 1, _normalized: bool = False):
        deg, _ = _level_context(level)
        if len(num) != deg:
            raise ValueError(f"need {deg} coefficients for level {level}, got {len(num)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            if den < 0:
                num = tuple(-c for c in num)
                den = -den
            g = gcd(den, *num) if any(num) else den
            if g > 1:
                num = tuple(c // g for c in num)
                den //= g
        self.level = level
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, level: int, value) -> CyclotomicNumber:
        q = Fraction(value)
        deg, _ = _level_context(level)
        return cls(level, (q.numerator,) + (0,) * (deg - 1), q.denominator)

    @classmethod
    def zero(cls, level: int) -> CyclotomicNumber:
        deg, _ = _level_context(level)
        return cls(level, (0,) * deg, 1, _normalized=True)

    @classmethod
    def one(cls, level: int) -> CyclotomicNumber:
        deg, _ = _level_context(level)
        return cls(level, (1,) + (0,) * (deg - 1), 1, _normalized=True)

    # -- canonical form / comparisons ----------------------------------

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.level == other.level and self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self.den, self.num))
        return self._hash

    def __repr__(self):
        return f"CyclotomicNumber(level={self.level}, num={self.num}, den={self.den})"

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            if other.level != self.level:
                raise ValueError("mixed cyclotomic levels")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.level, other)
        return None

    def __add__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = lcm(self.den, o.den)
        a, b = d // self.den, d // o.den
        return CyclotomicNumber(
            self.level, tuple(a * x + b * y for x, y in zip(self.num, o.num)), d
        )

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.level, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CyclotomicNumber:
        return (-self) + other

    def __mul__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for k, bk in enumerate(b):
                    if bk:
                        conv[i + k] += ai * bk
        return CyclotomicNumber(
            self.level, tuple(_reduce_exponents(self.level, conv)), self.den * o.den
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> CyclotomicNumber:
        o = self._coerce(other)
        return o * self.inverse()

    def __pow__(self, k: int) -> CyclotomicNumber:
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one(self.level)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> CyclotomicNumber:
        """Field inverse via extended Euclid against Phi_N over Q."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        if self.is_rational():
            q = 1 / self.rational_value()
            return CyclotomicNumber.from_rational(self.level, q)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.level)]
        f = [Fraction(c, self.den) for c in self.num]
        u = _poly_modular_inverse(f, phi)
        return _from_fraction_coeffs(self.level, u)

    # -- Galois structure -------------------------------------------------

    def galois(self, h: int) -> CyclotomicNumber:
        """Image under zeta -> zeta^h; h must be a unit mod the level."""
        n = self.level
        if gcd(h, n) != 1:
            raise ValueError(f"{h} is not a unit mod {n}")
        h %= n
        raw = [0] * n
        for i, c in enumerate(self.num):
            if c:
                raw[(i * h) % n] += c
        return CyclotomicNumber(n, tuple(_reduce_exponents(n, raw)), self.den)

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugation zeta -> zeta^(-1)."""
        if self.level <= 2:
            return self
        return self.galois(self.level - 1)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def mul_zeta_power(self, k: int) -> CyclotomicNumber:
        """Fast multiplication by zeta^k (an exponent shift plus reduction)."""
        n = self.level
        k %= n
        if k == 0:
            return self
        raw = [0] * n
        for i, c in enumerate(self.num):
            if c:
                raw[(i + k) % n] += c
        return CyclotomicNumber(n, tuple(_reduce_exponents(n, raw)), self.den)

    # -- numeric evaluation ----------------------------------------------

    def complex_value(self, h: int = 1) -> complex:
        """Float value at the embedding zeta -> exp(2*pi*i*h/N)."""
        n = self.level
        total = 0j
        for i, c in enumerate(self.num):
            if c:
                total += c * cmath.exp(2j * cmath.pi * ((i * h) % n) / n)
        return total / self.den


def _from_fraction_coeffs(level: int, coeffs: list[Fraction]) -> CyclotomicNumber:
    deg, _ = _level_context(level)
    coeffs = list(coeffs) + [Fraction(0)] * (deg - len(coeffs))
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return CyclotomicNumber(level, tuple(int(c * den) for c in coeffs[:deg]), den)


def zeta(level: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_N^k as a field element."""
    n = level
    k %= n
    deg, rows = _level_context(n)
    if k < deg:
        num = [0] * deg
        num[k] = 1
        return CyclotomicNumber(n, tuple(num), 1, _normalized=True)
    return CyclotomicNumber(n, rows[k - deg], 1)


# ---------------------------------------------------------------------------
# rational polynomial helpers (inverse only; hot paths never come here)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coeff = a[k + len(b) - 1] * inv_lead
        q[k] = coeff
        if coeff:
            for i, bi in enumerate(b):
                a[k + i] -= coeff * bi
    return q, _poly_trim(a)


def _poly_modular_inverse(f: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """u with u*f = 1 mod modulus, via extended Euclid over Q[x]."""
    r0, r1 = list(modulus), _poly_trim(list(f))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or (len(r1) == 1 and r1[0] != 0):
        if len(r1) == 1:
            break
        q, r = _poly_divmod(r0, r1)
        # s_new = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for k, sk in enumerate(s1):
                    prod[i + k] += qi * sk
        s_new = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            s_new[i] += c
        for i, c in enumerate(prod):
            s_new[i] -= c
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim(s_new)
    if not r1 or r1[0] == 0:
        raise ZeroDivisionError("element shares a factor with the modulus")
    scale = 1 / r1[0]
    return [c * scale for c in s1]


# ---------------------------------------------------------------------------
# exact signs of real elements


class SignUndecidableError(RuntimeError):
    pass


_SIGN_DPS_LADDER = (30, 80, 200, 500, 1200, 3000, 8000)


def real_sign(x: CyclotomicNumber) -> int:
    """Exact sign (-1, 0, 1) of a real cyclotomic number.

    Zero is decided by the canonical form, so the adaptive numeric loop only
    ever has to separate a provably nonzero real number from zero.
    """
    if x.is_zero():
        return 0
    if x.is_rational():
        return -1 if x.num[0] < 0 else 1
    if not x.is_real():
        raise ValueError(f"real_sign on non-real element {x!r}")
    n = x.level
    for dps in _SIGN_DPS_LADDER:
        with mpmath.workdps(dps):
            total = mpmath.mpf(0)
            for i, c in enumerate(x.num):
                if c:
                    total += c * mpmath.cospi(mpmath.mpf(2 * i) / n)
            # crude but safe: each term carries ~10^(5-dps) relative slack
            bound = (sum(abs(c) for c in x.num) + 1) * mpmath.mpf(10) ** (5 - dps)
            if abs(total) > bound:
                return 1 if total > 0 else -1
    raise SignUndecidableError(f"sign of {x!r} did not resolve at {_SIGN_DPS_LADDER[-1]} digits")


def finite_order_bound(level: int) -> int:
    """lcm of all k with phi(k) <= 2*phi(level).

    Any finite-order 2x2 matrix over Q(zeta_level) has eigenvalues that are
    roots of unity of degree at most 2 over the field, hence of order k with
    phi(k) <= 2*phi(level); its order divides this bound.
    """
    target = 2 * euler_phi(level)
    bound = 1
    # phi(k) >= sqrt(k/2), so phi(k) <= target forces k <= 2*target^2
    for k in range(1, 2 * target * target + 2):
        if euler_phi(k) <= target:
            bound = lcm(bound, k)
    return bound
