"""Closed-form counts and the cross-checked evaluator :func:`alpha_of`.

Every closed form returns a :class:`UniPoly` in ``q``. They are assembled
monomial by monomial so that no negative exponent ever appears, even where
the textbook form carries factors like ``q^{1-md}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import BudgetExceeded, DisagreementError, DomainError
from .exactalg import UniPoly
from .numbertheory import DegreeVec, prime_power
from .series import alpha_series
from .weights import WeightFn, weight_series


def _mono(e, c=1):
    if e < 0:
        raise ArithmeticError(f"negative exponent {e} while assembling a closed form")
    return UniPoly.monomial(e, c)


def closed_rfree_gcd(nvec, r: int) -> UniPoly:
    """d-tuples of degree ``nvec`` whose gcd is r-th power free.

    ``q^N - q^(N+1-rd)`` when ``min(nvec) >= r``, otherwise ``q^N``.
    """
    nvec = DegreeVec(nvec)
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    N, d = nvec.total(), nvec.d
    if min(nvec) >= r:
        return _mono(N) - _mono(N + 1 - r * d)
    return _mono(N)


def _geometric_block(top, steps, stride):
    """``q^top + q^(top-stride) + ... `` with ``steps + 1`` terms."""
    out = UniPoly()
    for t in range(steps + 1):
        out = out + _mono(top - t * stride)
    return out


def closed_residue(nvec, r: int, m: int) -> UniPoly:
    """d-tuples whose gcd multiplicities are all ``0..r-1`` mod ``m``.

    Writes ``q^N (1 + q^(1-md) + ... )`` as the descending progression
    ``q^N + q^(N-(md-1)) + ...``; the correction term for ``min >= r`` is
    the same progression started at ``q^(N-rd+1)``.
    """
    nvec = DegreeVec(nvec)
    if not 1 <= r < m:
        raise DomainError(f"need 1 <= r < m, got r={r}, m={m}")
    N, d, lo = nvec.total(), nvec.d, min(nvec)
    stride = m * d - 1
    result = _geometric_block(N, lo // m, stride)
    if lo >= r:
        result = result - _geometric_block(N - r * d + 1, (lo - r) // m, stride)
    return result


def _representations(n, a, b):
    """All ``(i, j)`` with ``i, j >= 0`` and ``a*i + b*j = n``."""
    if n < 0:
        return []
    return [(i, (n - a * i) // b) for i in range(n // a + 1) if (n - a * i) % b == 0]


def _check_coprime(a, b):
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise DomainError(f"need coprime positive generators, got {a}, {b}")


def closed_monoid(n: int, a: int, b: int) -> UniPoly:
    """Monic degree-``n`` polynomials whose multiplicities all lie in ``<a, b>``.

    ``sum_{ai+bj=n} q^(i+j) - sum_{ai+bj=n-ab} q^(i+j+1)``; empty sums are 0.
    """
    _check_coprime(a, b)
    out = UniPoly()
    for i, j in _representations(n, a, b):
        out = out + _mono(i + j)
    for i, j in _representations(n - a * b, a, b):
        out = out - _mono(i + j + 1)
    return out


def monoid_improved_applies(n, a, b):
    try:
        _check_coprime(a, b)
    except DomainError:
        return False
    return a < b and (a - 1) % (b - a) == 0 and (b - 1) % (b - a) == 0 and n > a * b - a - b


def closed_monoid_improved(n: int, a: int, b: int) -> UniPoly:
    """Cancellation-free form of :func:`closed_monoid` for ``n > ab - a - b``.

    Requires ``a < b`` and ``a = b = 1 (mod b - a)``. The positive terms form
    the progression ``q^e0, q^(e0-(b-a)), ..., q^(e0+1-a)`` and the negative
    ones ``q^e1, q^(e1+(b-a)), ..., q^(e1+a-(b-a)-1)``, where
    ``e0 = (n - (b-a) * ((b^-1 n) mod a)) / a`` and
    ``e1 = (n + (b-a) * ((a^-1 n) mod b)) / b + 1 - a``.
    """
    _check_coprime(a, b)
    if not a < b:
        raise DomainError(f"need a < b, got a={a}, b={b}")
    step = b - a
    if (a - 1) % step or (b - 1) % step:
        raise DomainError(f"need a = b = 1 mod {step}, got a={a}, b={b}")
    if n <= a * b - a - b:
        raise DomainError(f"need n > {a * b - a - b}, got {n}")
    b_inv = pow(b, -1, a) if a > 1 else 0
    a_inv = pow(a, -1, b)
    j0 = (b_inv * n) % a
    e0, rem0 = divmod(n - step * j0, a)
    i1 = (a_inv * n) % b
    e1, rem1 = divmod(n + step * i1, b)
    if rem0 or rem1:
        raise ArithmeticError(f"non-integer exponent for n={n}, a={a}, b={b}")
    e1 += 1 - a
    terms = (a - 1) // step
    up = _geometric_block(e0, terms, step)
    down = UniPoly()
    for t in range(terms):
        down = down + _mono(e1 + t * step)
    return up - down


def closed_no_mult_one(n: int) -> UniPoly:
    """Monic degree-``n`` polynomials with no simple irreducible factor (``n >= 2``)."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    h = n // 2
    return _mono(h) + _mono(h - 1) - _mono((n - 1) // 3)


def residue_chain_check(k: int) -> bool:
    """The period-6 relations between consecutive counts with no simple factor."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    q = UniPoly.gen()
    al = {i: closed_no_mult_one(6 * k + i) for i in (2, 3, 4, 5, 7)}
    return (
        al[2] == al[3]
        and q * al[3] == al[4]
        and al[4] == al[5]
        and q * al[5] == al[7]
    )


def closed_forms(w: WeightFn, nvec) -> dict:
    """Every closed form that applies to ``w`` at ``nvec``, keyed by name."""
    nvec = DegreeVec(nvec)
    p = w.params
    out = {}
    if w.kind == "all-one":
        out["all_one"] = _mono(nvec.total())
    elif w.kind == "rfree":
        out["rfree_gcd"] = closed_rfree_gcd(nvec, p["r"])
    elif w.kind == "mod":
        out["residue"] = closed_residue(nvec, p["r"], p["m"])
    elif w.kind == "monoid":
        n, a, b = nvec[0], p["a"], p["b"]
        out["monoid"] = closed_monoid(n, a, b)
        if monoid_improved_applies(n, a, b):
            out["monoid_improved"] = closed_monoid_improved(n, a, b)
        elif monoid_improved_applies(n, b, a):
            out["monoid_improved"] = closed_monoid_improved(n, b, a)
        if {a, b} == {2, 3} and n >= 2:
            out["no_mult_one"] = closed_no_mult_one(n)
    return out


@dataclass
class CountResult:
    """Weighted count at one degree vector, with every path that produced it.

    ``paths`` maps a tag (``series``, ``closed:<name>``, ``series@q``,
    ``brute``) to the value that path gave: a polynomial in ``q`` for the
    symbolic paths, an exact rational for the numeric ones.
    """

    weights: WeightFn
    nvec: DegreeVec
    symbolic: UniPoly
    q: int | None = None
    numeric: Fraction | None = None
    paths: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.q is not None and self.numeric is None:
            self.numeric = self.symbolic.evaluate(self.q)

    def disagreements(self):
        bad = {}
        for tag, v in self.paths.items():
            if isinstance(v, UniPoly):
                ok = v == self.symbolic
            else:
                ok = self.numeric is not None and Fraction(v) == self.numeric
            if not ok:
                bad[tag] = v
        return bad

    @property
    def agree(self):
        return not self.disagreements()

    def provenance(self):
        return list(self.paths)


def alpha_of(w: WeightFn, nvec, q: int | None = None, brute: bool = False,
             strict: bool = True) -> CountResult:
    """Weighted count of d-tuples of degree ``nvec``.

    The series coefficient is the reference value. Applicable closed forms
    are evaluated alongside; with an integer ``q`` the numeric series is
    also computed, and ``brute=True`` adds exhaustive enumeration when ``q``
    is a supported prime power and the enumeration fits the budget. With
    ``strict`` any disagreement raises :class:`DisagreementError`.
    """
    nvec = DegreeVec(nvec)
    if nvec.d != w.d:
        raise DomainError(f"weight dimension {w.d} != degree vector length {nvec.d}")
    g = weight_series(w, nvec)
    symbolic = alpha_series(g)[tuple(nvec)]
    symbolic = symbolic if isinstance(symbolic, UniPoly) else UniPoly({0: symbolic})
    paths = {"series": symbolic}
    for name, poly in closed_forms(w, nvec).items():
        paths[f"closed:{name}"] = poly
    result = CountResult(w, nvec, symbolic, q=q)
    if q is not None:
        paths["series@q"] = Fraction(alpha_series(g, q=q)[tuple(nvec)])
        if brute and prime_power(q):
            from .ffpoly import brute_alpha, field_of_order
            try:
                paths["brute"] = brute_alpha(field_of_order(q), nvec, w)
            except BudgetExceeded:
                pass
    result.paths = paths
    if strict and not result.agree:
        raise DisagreementError({**paths, "reference": symbolic})
    return result
