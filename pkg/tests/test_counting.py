import pytest

from cyclopoly.counting import (
    alpha_of,
    closed_forms,
    closed_monoid,
    closed_monoid_improved,
    closed_no_mult_one,
    closed_residue,
    closed_rfree_gcd,
    monoid_improved_applies,
    residue_chain_check,
)
from cyclopoly.errors import DisagreementError, DomainError
from cyclopoly.exactalg import UniPoly
from cyclopoly.weights import WeightFn

q = UniPoly.gen()


def test_rfree_gcd_examples():
    assert closed_rfree_gcd((5,), 2) == q**5 - q**4
    assert closed_rfree_gcd((3, 2), 2) == q**5 - q**2
    assert closed_rfree_gcd((0, 4), 1) == q**4
    assert closed_rfree_gcd((3, 2), 1).evaluate(2) == 16


def test_residue_examples():
    # Degree 1 with m=2, r=1: the single factor has odd multiplicity, so nothing survives.
    assert closed_residue((1,), 1, 2) == 0
    assert closed_residue((0, 4), 1, 2) == q**4
    # Monic quadratics with only even multiplicities: the q squares of linear polynomials.
    assert closed_residue((2,), 1, 2) == q
    with pytest.raises(DomainError):
        closed_residue((2,), 2, 2)


def test_monoid_examples():
    assert closed_monoid(6, 2, 3) == q**3 + q**2 - q
    assert closed_monoid(8, 2, 3) == q**4 + q**3 - q**2
    assert closed_monoid(16, 3, 5) == q**4
    assert closed_monoid(1, 2, 3) == 0
    assert closed_monoid(0, 2, 3) == 1


def test_improved_form_preconditions():
    assert monoid_improved_applies(10, 2, 3)
    assert not monoid_improved_applies(1, 2, 3)
    assert not monoid_improved_applies(10, 2, 5)
    with pytest.raises(DomainError):
        closed_monoid_improved(10, 2, 5)
    with pytest.raises(DomainError):
        closed_monoid_improved(1, 2, 3)


def test_no_mult_one():
    assert closed_no_mult_one(6) == q**3 + q**2 - q
    with pytest.raises(DomainError):
        closed_no_mult_one(1)
    assert all(residue_chain_check(k) for k in range(8))


def test_closed_forms_by_kind():
    assert set(closed_forms(WeightFn.monoid_ab(2, 3), 6)) == {"monoid", "monoid_improved", "no_mult_one"}
    assert set(closed_forms(WeightFn.monoid_ab(3, 2), 6)) == {"monoid", "monoid_improved", "no_mult_one"}
    assert set(closed_forms(WeightFn.monoid_ab(2, 5), 6)) == {"monoid"}
    assert closed_forms(WeightFn.table({1: 1}, 1), 3) == {}


def test_alpha_of_paths():
    res = alpha_of(WeightFn.monoid_ab(2, 3), (6,), q=2, brute=True)
    assert res.symbolic == q**3 + q**2 - q
    assert res.numeric == 10
    assert res.agree
    assert res.provenance() == [
        "series", "closed:monoid", "closed:monoid_improved", "closed:no_mult_one", "series@q", "brute",
    ]


def test_alpha_of_skips_brute_over_budget(monkeypatch):
    monkeypatch.setenv("CYCLOPOLY_BUDGET", "10")
    res = alpha_of(WeightFn.all_one(), (5,), q=2, brute=True)
    assert "brute" not in res.paths and res.numeric == 32


def test_alpha_of_non_prime_power_q():
    res = alpha_of(WeightFn.min_lt_r(2), (4,), q=6, brute=True)
    assert res.numeric == 6**4 - 6**3 and "brute" not in res.paths


def test_disagreement_is_raised(monkeypatch):
    import cyclopoly.counting as counting

    monkeypatch.setattr(counting, "closed_forms", lambda w, n: {"bogus": q})
    with pytest.raises(DisagreementError):
        alpha_of(WeightFn.all_one(), (3,))
    assert not alpha_of(WeightFn.all_one(), (3,), strict=False).agree


def test_dimension_mismatch():
    with pytest.raises(DomainError):
        alpha_of(WeightFn.all_one(2), (3,))
