from fractions import Fraction

import pytest

from cyclopoly.errors import BudgetExceeded, DomainError
from cyclopoly.ffpoly import (
    FactorTable,
    GFPoly,
    brute_alpha,
    brute_gcd_power_free,
    build_field,
    enumerate_monic,
    factorize,
    field_of_order,
    irreducibles,
    is_irreducible,
    parse_field,
    parse_poly,
    poly_gcd,
)
from cyclopoly.numbertheory import count_irreducibles
from cyclopoly.weights import WeightFn

F2 = field_of_order(2)


def test_extension_field_moduli():
    assert build_field(2, 2).modulus == (1, 1, 1)
    assert build_field(3, 2).modulus == (1, 0, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms(q):
    F = field_of_order(q)
    for a in range(q):
        assert F.add[a, F.neg[a]] == 0
        if a:
            assert F.mul[a, F.inv[a]] == 1
        for b in range(q):
            assert F.mul[a, b] == F.mul[b, a]


def test_bad_fields():
    with pytest.raises(DomainError):
        build_field(6)
    with pytest.raises(DomainError):
        field_of_order(12)
    with pytest.raises(BudgetExceeded):
        field_of_order(32)


def test_parse_field_forms():
    assert parse_field("4=2^2") == parse_field("2^2") == parse_field("4") == build_field(2, 2)
    assert str(parse_field("4")) == "4=2^2"
    with pytest.raises(DomainError):
        parse_field("8=2^2")


def test_poly_parse_and_render():
    p = parse_poly("x^6+x^4+x^3+x", F2)
    assert str(p) == "x^6+x^4+x^3+x"
    assert p.degree == 6 and p.is_monic()
    with pytest.raises(DomainError):
        parse_poly("2*x+1", F2)
    with pytest.raises(DomainError):
        parse_poly("x^^2", F2)


def test_factorization_example():
    fac = factorize(parse_poly("x^6+x^4+x^3+x", F2))
    assert str(fac) == "x*(x+1)^3*(x^2+x+1)"
    assert fac.expand() == parse_poly("x^6+x^4+x^3+x", F2)
    assert fac.degree_counts() == {1: 4, 2: 1}


def test_factorize_rejects_non_monic():
    F3 = field_of_order(3)
    with pytest.raises(DomainError):
        factorize(parse_poly("2*x+1", F3))


@pytest.mark.parametrize("q,n", [(2, 6), (3, 4), (4, 3), (5, 3)])
def test_enumeration_is_complete_and_ordered(q, n):
    F = field_of_order(q)
    polys = list(enumerate_monic(F, n))
    assert len(polys) == q**n
    assert len({tuple(p.coeffs) for p in polys}) == q**n
    assert [p.index for p in polys] == list(range(q**n))


@pytest.mark.parametrize("q,n", [(2, 7), (3, 5), (4, 4), (9, 3)])
def test_sieve_matches_trial_division(q, n):
    F = field_of_order(q)
    sieved = irreducibles(F, n)
    assert len(sieved) == count_irreducibles(q, n)
    assert {p.index for p in sieved} == {p.index for p in enumerate_monic(F, n) if is_irreducible(p)}


@pytest.mark.parametrize("q,n", [(2, 8), (3, 5), (4, 4)])
def test_factor_table_matches_trial_division(q, n):
    F = field_of_order(q)
    table = FactorTable(F, n)
    for p in enumerate_monic(F, n):
        assert table.factorization(p) == factorize(p)


def test_gcd_and_division():
    F3 = field_of_order(3)
    a = parse_poly("x^3+2*x+1", F3)
    b = parse_poly("x^2+1", F3)
    g = poly_gcd(a * b, b * b)
    assert g == b
    qt, rm = divmod(a * b + parse_poly("x", F3), b)
    assert qt == a and rm == parse_poly("x", F3)
    zero = GFPoly(F3, [])
    assert poly_gcd(zero, zero) == zero


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        next(enumerate_monic(F2, 10, budget=100))
    with pytest.raises(BudgetExceeded):
        brute_alpha(F2, (6, 6), WeightFn.all_one(2), budget=1000)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("CYCLOPOLY_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        brute_alpha(F2, (4,), WeightFn.all_one())


def test_brute_oracles_agree_on_gcd_weights():
    for r in (1, 2):
        w = WeightFn.min_lt_r(r, 2)
        for nvec in [(2, 3), (4, 4), (1, 5)]:
            assert brute_alpha(F2, nvec, w) == brute_gcd_power_free(F2, nvec, r)


def test_brute_alpha_with_rational_table():
    w = WeightFn.table({0: 1, 1: "1/2"}, 1)
    # Monic quadratics over GF(2): x(x+1) weighs 1/4, x^2+x+1 weighs 1/2, squares weigh 0.
    assert brute_alpha(F2, (2,), w) == Fraction(3, 4)
