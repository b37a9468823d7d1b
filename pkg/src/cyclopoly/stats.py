"""Factor-count statistics: expected ``f_j`` and the q/t factor-count polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .errors import DomainError
from .exactalg import BiPoly, UniPoly
from .numbertheory import DegreeVec, count_irreducibles, count_irreducibles_symbolic
from .series import MultiSeries, alpha_series, series_exp, series_inverse, substitute_power
from .weights import WeightFn, weight_series


@dataclass(frozen=True)
class FactorCountProfile:
    """``f_j``: number of degree-``j`` irreducible factors, with multiplicity."""

    counts: dict

    @classmethod
    def from_factorization(cls, fac):
        return cls(dict(fac.degree_counts()))

    def f(self, j):
        return self.counts.get(j, 0)

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def degree(self):
        return sum(j * c for j, c in self.counts.items())


class SymbolicRatio(NamedTuple):
    """A rational function of ``q`` kept as an unreduced numerator/denominator."""

    numerator: UniPoly
    denominator: UniPoly

    def evaluate(self, q):
        den = self.denominator.evaluate(q)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at q={q}")
        return self.numerator.evaluate(q) / den


def _first_weighted_series(w, caps):
    """``sum_n n_1 w(n) z^n``."""
    return MultiSeries.from_function(caps, lambda n: n[0] * w.evaluate(n))


def expected_factor_count(w: WeightFn, nvec, j: int, q: int | None = None):
    """Expected number of degree-``j`` factors of the first component.

    The tuple is drawn with probability proportional to its weight. Returns
    an exact ``Fraction`` for integer ``q``; for ``q=None`` the answer is a
    :class:`SymbolicRatio` of two polynomials in ``q``.
    """
    nvec = DegreeVec(nvec)
    if j < 1:
        raise DomainError(f"factor degree must be >= 1, got {j}")
    if nvec.d != w.d:
        raise DomainError(f"weight dimension {w.d} != degree vector length {nvec.d}")
    key = tuple(nvec)
    g = weight_series(w, nvec)
    alpha = alpha_series(g, q=q)
    total = alpha[key]
    if not total:
        raise DomainError(f"the weighted count at {key} is zero")
    s_j = substitute_power(g, j)
    t_j = substitute_power(_first_weighted_series(w, nvec), j)
    coeff = (t_j * series_inverse(s_j) * alpha)[key]
    if q is None:
        num = count_irreducibles_symbolic(j) * coeff
        den = total if isinstance(total, UniPoly) else UniPoly({0: total})
        return SymbolicRatio(num, den)
    return count_irreducibles(q, j) * Fraction(coeff) / Fraction(total)


def qt_polynomial(n: int) -> BiPoly:
    """``sum_{deg p = n} t^{f(p)}`` as a polynomial in ``q`` and ``t``.

    Coefficient of ``z^n`` in ``prod_k (1 - t z^k)^(-M(q,k))``, expanded as
    ``exp(sum_k M(q,k) sum_m t^m z^(km) / m)``.
    """
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    if n == 0:
        return BiPoly({(0, 0): 1})
    caps = (n,)
    log_terms = {}
    for k in range(1, n + 1):
        mk = count_irreducibles_symbolic(k).to_bipoly()
        for m in range(1, n // k + 1):
            term = mk * BiPoly({(0, m): Fraction(1, m)})
            key = (k * m,)
            log_terms[key] = log_terms[key] + term if key in log_terms else term
    return series_exp(MultiSeries(caps, log_terms))[(n,)]


def qt_symmetry_check(n: int) -> bool:
    return qt_polynomial(n).is_symmetric()


def qt_from_matrix(matrix, n: int) -> BiPoly:
    """``(1/n!) * sum M[i][j] t^(n-i) q^(n-j)`` for an ``n x n`` table."""
    out = {}
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if v:
                out[(n - j, n - i)] = Fraction(v, factorial(n))
    return BiPoly(out)
