from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclopoly.errors import DomainError, ShapeError
from cyclopoly.exactalg import UniPoly
from cyclopoly.series import (
    MultiSeries,
    alpha_series,
    alpha_series_by_product,
    cyclotomic_product,
    extract_exponents,
    reconstruct_from_exponents,
    series_exp,
    series_exp_naive,
    series_inverse,
    series_log,
    series_log_naive,
    substitute_power,
)

small = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))


@st.composite
def series(draw, constant=1, caps=None):
    if caps is None:
        d = draw(st.integers(1, 2))
        caps = tuple(draw(st.integers(1, 4)) for _ in range(d))
    d = len(caps)
    keys = st.tuples(*(st.integers(0, c) for c in caps))
    coeffs = draw(st.dictionaries(keys, small, max_size=5))
    coeffs[(0,) * d] = constant
    return MultiSeries(caps, coeffs)


@settings(max_examples=40, deadline=None)
@given(series())
def test_log_recurrence_matches_power_sum(g):
    assert series_log(g) == series_log_naive(g)


@settings(max_examples=40, deadline=None)
@given(series(constant=0))
def test_exp_recurrence_matches_power_sum(f):
    assert series_exp(f) == series_exp_naive(f)


@settings(max_examples=40, deadline=None)
@given(series())
def test_exp_log_roundtrip(g):
    assert series_exp(series_log(g)) == g


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_log_turns_products_into_sums(data):
    f = data.draw(series())
    g = data.draw(series(caps=tuple(f.caps)))
    assert series_log(f * g) == series_log(f) + series_log(g)


@settings(max_examples=40, deadline=None)
@given(series())
def test_inverse(g):
    assert g * series_inverse(g) == MultiSeries.one(g.caps)


@settings(max_examples=30, deadline=None)
@given(series())
def test_extract_then_reconstruct(g):
    assert reconstruct_from_exponents(extract_exponents(g), g.caps) == g


def test_extract_exponents_examples():
    assert extract_exponents(MultiSeries.from_list([1, 1, 0, 0, 0, 0])) == {(1,): 1, (2,): -1}
    monoid = MultiSeries.from_list([1, 0, 1, 1, 1, 1, 1, 1, 1])
    assert extract_exponents(monoid) == {(2,): 1, (3,): 1, (6,): -1}


def test_shape_errors():
    a = MultiSeries.one((3,))
    b = MultiSeries.one((4,))
    with pytest.raises(ShapeError):
        a * b
    with pytest.raises(ShapeError):
        a + MultiSeries.one((3, 3))
    with pytest.raises(ShapeError):
        a[(5,)]


def test_domain_errors():
    with pytest.raises(DomainError):
        series_log(MultiSeries.from_list([2, 1]))
    with pytest.raises(DomainError):
        series_exp(MultiSeries.from_list([1, 1]))
    with pytest.raises(DomainError):
        series_inverse(MultiSeries.from_list([0, 1]))
    with pytest.raises(DomainError):
        substitute_power(MultiSeries.one((2,)), 0)


def test_substitute_power():
    f = MultiSeries.from_list([1, 2, 3, 4, 5])
    assert substitute_power(f, 2).coefficients() == [1, 0, 2, 0, 3]


@pytest.mark.parametrize("q", [2, 3, 5])
def test_cyclotomic_product_is_geometric(q):
    assert cyclotomic_product(q, 12).coefficients() == [q**n for n in range(13)]


def test_alpha_series_symbolic_and_numeric_agree():
    g = MultiSeries.from_list([1, 1, 0, 0, 0, 0, 0])  # square-free
    sym = alpha_series(g)
    q = UniPoly.gen()
    assert sym[(0,)] == 1 and sym[(1,)] == q
    for n in range(2, 7):
        assert sym[(n,)] == q**n - q ** (n - 1)
    assert alpha_series(g, q=3).coefficients() == [sym[(n,)].evaluate(3) if n else 1 for n in range(7)]


def test_product_path_needs_integer_exponents():
    g = MultiSeries.from_list([1, Fraction(1, 2), 0, 0])
    with pytest.raises(DomainError):
        alpha_series_by_product(g)
    assert alpha_series(g, q=2)[(1,)] == 1
