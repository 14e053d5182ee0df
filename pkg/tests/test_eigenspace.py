from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fujitacert.eigenspace import (
    DegenerateCharacterError,
    ResidueWeights,
    SplitClass,
    WeightTuple,
    eigenspace_table,
    hodge_dims,
    mu,
    sigma_sum,
    signature,
)


@st.composite
def weight_tuples(draw, max_n=30):
    n = draw(st.integers(min_value=4, max_value=max_n))
    m0 = draw(st.integers(min_value=1, max_value=n - 3))
    m1 = draw(st.integers(min_value=1, max_value=n - 3))
    m2 = draw(st.integers(min_value=1, max_value=n - 3))
    m3 = n - m0 - m1 - m2
    assume(1 <= m3 <= n - 3)
    assume(gcd(gcd(gcd(gcd(m0, m1), m2), m3), n) == 1)
    return WeightTuple(n=n, m=(m0, m1, m2, m3))


def test_weight_tuple_validation():
    with pytest.raises(ValueError):
        WeightTuple(5, (1, 1, 1, 3))  # sum 6 != 5
    with pytest.raises(ValueError):
        WeightTuple(5, (1, 1, 0, 3))  # zero exponent
    with pytest.raises(ValueError):
        WeightTuple(8, (2, 2, 2, 2))  # gcd(m, n) = 2
    with pytest.raises(ValueError):
        WeightTuple(7, (1, 1, 5, 0))  # exponent above n-3 plus a zero
    WeightTuple(6, (1, 1, 1, 3))  # boundary m3 = n-3 is allowed
    WeightTuple(7, (1, 1, 1, 4))


def test_mu_examples():
    w = WeightTuple(5, (1, 1, 1, 2))
    assert mu(w, 3, 2) == Fraction(4, 5)
    assert mu(w, 0, 1) == Fraction(1, 5)
    w6 = WeightTuple(6, (1, 2, 2, 1))
    with pytest.raises(DegenerateCharacterError):
        mu(w6, 1, 3)


def test_sigma_sum_examples():
    w8 = ResidueWeights(8, (4, 4, 3, 5))
    for h in (1, 3, 5, 7):
        assert sigma_sum(w8, h) == 16
    w = WeightTuple(5, (1, 1, 1, 2))
    assert sigma_sum(w, 1) == 5
    assert sigma_sum(w, 4) == 15


def test_hodge_dims_examples():
    w = WeightTuple(5, (1, 1, 1, 2))
    assert hodge_dims(w, 1) == (0, 2)
    assert hodge_dims(w, 4) == (2, 0)
    assert hodge_dims(WeightTuple(7, (1, 1, 1, 4)), 3) == (1, 1)


def test_signature_examples():
    w = WeightTuple(5, (1, 1, 1, 2))
    assert signature(w, 2) == (1, 1)
    assert signature(w, 4) == (2, 0)
    assert signature(WeightTuple(4, (1, 1, 1, 1)), 1) == (0, 2)


def test_eigenspace_table_n5():
    w = WeightTuple(5, (1, 1, 1, 2))
    table = eigenspace_table(w)
    assert [r.split_class for r in table] == [
        SplitClass.ZERO,
        SplitClass.AMPLE_CANDIDATE,
        SplitClass.AMPLE_CANDIDATE,
        SplitClass.FLAT,
    ]
    assert [r.dim_h10 for r in table] == [0, 1, 1, 2]
    assert sum(r.dim_h10 for r in table) == 4


def test_eigenspace_table_n7():
    table = eigenspace_table(WeightTuple(7, (1, 1, 1, 4)))
    assert [r.dim_h10 for r in table] == [0, 0, 1, 1, 2, 2]
    assert sum(r.dim_h10 for r in table) == 6


def test_degenerate_rows_flagged_not_fatal():
    w = ResidueWeights(6, (1, 2, 2, 1))
    table = eigenspace_table(w)
    degenerate_js = [r.j for r in table if r.degenerate]
    assert degenerate_js == [3]
    assert table[2].split_class is None


def test_character_zero_rejected():
    w = WeightTuple(5, (1, 1, 1, 2))
    with pytest.raises(ValueError):
        sigma_sum(w, 0)
    with pytest.raises(ValueError):
        sigma_sum(w, 5)


@given(weight_tuples(), st.data())
def test_sigma_in_allowed_set(w, data):
    j = data.draw(st.integers(min_value=1, max_value=w.n - 1))
    try:
        total = sigma_sum(w, j)
    except DegenerateCharacterError:
        return
    assert total in (w.n, 2 * w.n, 3 * w.n)


@given(weight_tuples(), st.data())
def test_complementary_characters(w, data):
    j = data.draw(st.integers(min_value=1, max_value=w.n - 1))
    try:
        s1 = sigma_sum(w, j)
        s2 = sigma_sum(w, w.n - j)
    except DegenerateCharacterError:
        return
    assert s1 + s2 == 4 * w.n
    assert signature(w, j) == tuple(reversed(signature(w, w.n - j)))


@given(weight_tuples())
def test_unit_weights_fill_genus(w):
    assume(w.all_units())
    table = eigenspace_table(w)
    assert not any(r.degenerate for r in table)
    assert sum(r.dim_h10 for r in table) == w.n - 1


@given(weight_tuples(), st.data())
def test_flat_iff_complement_zero(w, data):
    j = data.draw(st.integers(min_value=1, max_value=w.n - 1))
    table = eigenspace_table(w)
    row, comp = table[j - 1], table[w.n - j - 1]
    if row.degenerate:
        assert comp.degenerate
        return
    assert (row.split_class is SplitClass.FLAT) == (comp.split_class is SplitClass.ZERO)
