import pytest
from hypothesis import given, strategies as st

from cyclopoly.errors import DomainError
from cyclopoly.exactalg import UniPoly
from cyclopoly.numbertheory import (
    DegreeVec,
    count_irreducibles,
    count_irreducibles_symbolic,
    divisors,
    is_prime,
    moebius,
    prime_power,
)


def test_moebius_small_values():
    assert [moebius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_divisors_sorted():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


@pytest.mark.parametrize("bad", [0, -3])
def test_nonpositive_arguments_rejected(bad):
    with pytest.raises(DomainError):
        moebius(bad)
    with pytest.raises(DomainError):
        divisors(bad)


@given(st.integers(min_value=2, max_value=400))
def test_moebius_sums_to_zero_over_divisors(n):
    assert sum(moebius(k) for k in divisors(n)) == 0


def test_known_irreducible_counts():
    assert [count_irreducibles(2, n) for n in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert count_irreducibles(3, 2) == 3
    assert count_irreducibles(4, 2) == 6


@given(st.integers(min_value=2, max_value=13), st.integers(min_value=1, max_value=12))
def test_necklace_identity(q, n):
    assert sum(k * count_irreducibles(q, k) for k in divisors(n)) == q**n


def test_symbolic_count_matches_numeric():
    P = count_irreducibles_symbolic(6)
    assert isinstance(P, UniPoly)
    assert P == (UniPoly.monomial(6) - UniPoly.monomial(3) - UniPoly.monomial(2) + UniPoly.monomial(1)) / 6
    for q in (2, 3, 5, 6):
        assert P.evaluate(q) == count_irreducibles(q, 6)


def test_prime_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_degree_vec():
    v = DegreeVec((3, 6))
    assert v.d == 2 and v.total() == 9 and v.gcd() == 3 and v.min() == 3
    assert DegreeVec(4) == (4,)
    with pytest.raises(DomainError):
        DegreeVec((1, -1))
    with pytest.raises(DomainError):
        DegreeVec(())
    with pytest.raises(DomainError):
        DegreeVec((0, 0)).gcd()
