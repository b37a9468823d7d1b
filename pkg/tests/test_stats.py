from fractions import Fraction

import pytest

from cyclopoly.errors import DomainError
from cyclopoly.exactalg import BiPoly, UniPoly
from cyclopoly.ffpoly import factorize, field_of_order, parse_poly
from cyclopoly.stats import (
    FactorCountProfile,
    SymbolicRatio,
    expected_factor_count,
    qt_from_matrix,
    qt_polynomial,
    qt_symmetry_check,
)
from cyclopoly.weights import WeightFn

q = UniPoly.gen()


def test_profile_from_factorization():
    fac = factorize(parse_poly("x^6+x^4+x^3+x", field_of_order(2)))
    prof = FactorCountProfile.from_factorization(fac)
    assert prof.f(1) == 4 and prof.f(2) == 1 and prof.f(3) == 0
    assert prof.total == 5 and prof.degree == 6


def test_expected_linear_factors_all_one():
    assert expected_factor_count(WeightFn.all_one(), (2,), 1, q=2) == Fraction(3, 2)
    assert expected_factor_count(WeightFn.all_one(), (6,), 2, q=2) == Fraction(21, 64)


def test_expected_square_free_and_tuples():
    assert expected_factor_count(WeightFn.min_lt_r(2), (5,), 1, q=3) == Fraction(20, 27)
    assert expected_factor_count(WeightFn.min_lt_r(1, 2), (2, 3), 1, q=2) == Fraction(5, 4)


def test_expected_symbolic():
    r = expected_factor_count(WeightFn.all_one(), (4,), 1)
    assert isinstance(r, SymbolicRatio)
    assert r.numerator == q**4 + q**3 + q**2 + q
    assert r.denominator == q**4
    for x in (2, 3, 5):
        assert r.evaluate(x) == expected_factor_count(WeightFn.all_one(), (4,), 1, q=x)


def test_expected_errors():
    with pytest.raises(DomainError):
        expected_factor_count(WeightFn.all_one(), (3,), 0, q=2)
    with pytest.raises(DomainError):
        expected_factor_count(WeightFn.monoid_ab(2, 3), (1,), 1, q=2)


def test_qt_small_cases():
    assert qt_polynomial(0) == BiPoly({(0, 0): 1})
    assert qt_polynomial(1) == BiPoly({(1, 1): 1})
    assert qt_polynomial(2) == qt_from_matrix([[1, 1], [1, -1]], 2)


@pytest.mark.parametrize("n", range(9))
def test_qt_symmetry_and_specialization(n):
    assert qt_symmetry_check(n)
    assert qt_polynomial(n).eval_t(1) == q**n
