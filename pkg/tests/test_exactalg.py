from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclopoly.errors import DomainError
from cyclopoly.exactalg import BiPoly, UniPoly

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
unipolys = st.dictionaries(st.integers(0, 6), rationals, max_size=5).map(UniPoly)
bipolys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), rationals, max_size=5).map(BiPoly)


@given(unipolys, unipolys, unipolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly()


@given(unipolys, unipolys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


@given(bipolys, bipolys)
def test_bipoly_swap_is_an_involutive_ring_map(a, b):
    assert a.swap().swap() == a
    assert (a * b).swap() == a.swap() * b.swap()
    assert (a * a.swap()).is_symmetric()


def test_rendering():
    q = UniPoly.gen()
    assert str(q**5 - q**4) == "q^5 - q^4"
    assert str((q**2 - q) / 2) == "1/2*q^2 - 1/2*q"
    assert str(UniPoly()) == "0"
    assert str(UniPoly({0: -3})) == "-3"
    assert str(BiPoly({(2, 1): 1, (0, 0): 1})) == "q^2*t + 1"


def test_degree_and_constants():
    assert UniPoly().degree == -1
    assert UniPoly([1, 0, 2]).degree == 2
    assert UniPoly({0: 5}) == 5
    assert hash(UniPoly({0: Fraction(1, 2)})) == hash(Fraction(1, 2))


def test_negative_exponent_rejected():
    with pytest.raises(DomainError):
        UniPoly({-1: 1})


def test_bipoly_specializations():
    P = BiPoly({(2, 0): 1, (1, 1): 2, (0, 3): -1})
    assert P.eval_t(1) == UniPoly({2: 1, 1: 2}) - 1
    assert P.eval_q(2) == UniPoly({0: 4, 1: 4, 3: -1}, var="t")
    assert P.evaluate(2, 3) == 4 + 12 - 27
