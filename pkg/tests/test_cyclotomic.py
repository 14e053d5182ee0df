from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fujitacert.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_polynomial,
    finite_order_bound,
    real_sign,
    zeta,
)
from fujitacert.residues import euler_phi, units

LEVELS = st.integers(min_value=2, max_value=13)


@st.composite
def elements(draw, level):
    deg = euler_phi(level)
    nums = draw(st.lists(st.integers(min_value=-9, max_value=9), min_size=deg, max_size=deg))
    den = draw(st.integers(min_value=1, max_value=6))
    return CyclotomicNumber(level, tuple(nums), den)


@st.composite
def level_and_elements(draw, count):
    level = draw(LEVELS)
    return level, [draw(elements(level)) for _ in range(count)]


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree is phi(n)
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for k, y in enumerate(b):
            out[i + k] += x * y
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 9, 12, 15, 24, 30])
def test_product_of_cyclotomics_is_xn_minus_1(n):
    prod = [1]
    for d in range(1, n + 1):
        if n % d == 0:
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
    expected = [-1] + [0] * (n - 1) + [1]
    assert prod == expected


def test_zeta_powers():
    z = zeta(5)
    assert z**5 == CyclotomicNumber.one(5)
    assert z**4 == zeta(5, 4)
    assert zeta(5, 7) == zeta(5, 2)
    total = sum((zeta(5, k) for k in range(1, 5)), CyclotomicNumber.zero(5))
    assert total == CyclotomicNumber.from_rational(5, -1)


def test_equality_is_canonical():
    a = CyclotomicNumber(6, (2, 4), 2)
    b = CyclotomicNumber(6, (1, 2), 1)
    assert a == b
    assert hash(a) == hash(b)


@settings(max_examples=40)
@given(level_and_elements(3))
def test_ring_axioms(data):
    _, (x, y, z) = data
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=40)
@given(level_and_elements(1))
def test_inverse_roundtrip(data):
    level, (x,) = data
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
        return
    assert x * x.inverse() == CyclotomicNumber.one(level)


@settings(max_examples=40)
@given(level_and_elements(2))
def test_conjugation_is_ring_involution(data):
    _, (x, y) = data
    assert x.conjugate().conjugate() == x
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@settings(max_examples=40)
@given(level_and_elements(1), st.data())
def test_galois_composition(data, draw):
    level, (x,) = data
    us = units(level)
    h = draw.draw(st.sampled_from(us))
    k = draw.draw(st.sampled_from(us))
    assert x.galois(h).galois(k) == x.galois((h * k) % level)


@settings(max_examples=40)
@given(level_and_elements(1))
def test_norm_like_product_is_real(data):
    level, (x,) = data
    prod = x * x.conjugate()
    assert prod.is_real()
    if not prod.is_zero():
        assert real_sign(prod) == 1  # |x|^2 > 0


def test_galois_rejects_non_unit():
    with pytest.raises(ValueError):
        zeta(8).galois(2)


def test_mul_zeta_power_matches_general_mul():
    x = zeta(12, 2) + 3 * zeta(12, 3) - Fraction(1, 2)
    for k in range(12):
        assert x.mul_zeta_power(k) == x * zeta(12, k)


def test_real_sign_examples():
    y = zeta(7) + zeta(7, 6)  # 2cos(2pi/7) > 0
    y2 = zeta(7, 3) + zeta(7, 4)  # 2cos(6pi/7) < 0
    assert real_sign(y) == 1
    assert real_sign(y2) == -1
    assert real_sign(CyclotomicNumber.zero(7)) == 0
    # sqrt(5) = 1 + 2*(zeta5 + zeta5^4): positive and needs no luck to decide
    root5 = 1 + 2 * (zeta(5) + zeta(5, 4))
    assert real_sign(root5) == 1
    assert real_sign(-root5) == -1


def test_real_sign_rejects_non_real():
    with pytest.raises(ValueError):
        real_sign(zeta(5))


def test_finite_order_bound_values():
    # phi(k) <= 2*phi(4) = 4 holds for k in {1..6, 8, 10, 12}: lcm = 120
    assert finite_order_bound(4) == 120
    b5 = finite_order_bound(5)
    for k in (1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30):
        if euler_phi(k) <= 8:
            assert b5 % k == 0
    # any root of unity of degree <= 2 over the field divides the bound
    assert b5 == 5040
