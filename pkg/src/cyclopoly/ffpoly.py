"""Polynomials over small finite fields, exhaustive enumeration, factorisation.

This module is the brute-force side of every count in the package: it
enumerates monic polynomials, factors them, and sums weights directly.

Field elements of GF(p^k) are encoded as integers in ``[0, p^k)`` through
the base-``p`` digits of their residue polynomial. Polynomials store their
coefficients from the constant term upward. A monic polynomial of degree
``n`` has an *index* ``sum_{i<n} c_i q^i``; ordering by degree and then
index is the package's total order.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import BudgetExceeded, DomainError
from .exactalg import UniPoly
from .numbertheory import DegreeVec, is_prime, prime_power

DEFAULT_BUDGET = 10**7
DEFAULT_MAX_ORDER = 16
BUDGET_ENV = "CYCLOPOLY_BUDGET"


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def _check_budget(cost, budget, what):
    budget = default_budget() if budget is None else budget
    if cost > budget:
        raise BudgetExceeded(cost, budget, what)


@dataclass(frozen=True)
class FieldSpec:
    """GF(q) with ``q = p^k``, realised as GF(p)[y] / (modulus)."""

    p: int
    k: int
    modulus: tuple
    q: int = dc_field(init=False)
    add: np.ndarray = dc_field(repr=False, compare=False)
    mul: np.ndarray = dc_field(repr=False, compare=False)
    neg: tuple = dc_field(repr=False, compare=False)
    inv: tuple = dc_field(repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.k)

    def __str__(self):
        return str(self.p) if self.k == 1 else f"{self.q}={self.p}^{self.k}"

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))


def _prime_field_tables(p):
    a = np.arange(p)
    add = (a[:, None] + a[None, :]) % p
    mul = (a[:, None] * a[None, :]) % p
    return add, mul


def _tables_from_modulus(p, k, modulus):
    """Addition/multiplication tables of GF(p)[y]/(modulus) on digit codes."""
    q = p**k

    def digits(e):
        return [(e // p**i) % p for i in range(k)]

    def code(ds):
        return sum(d * p**i for i, d in enumerate(ds))

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        dx = digits(x)
        for y in range(q):
            dy = digits(y)
            add[x, y] = code([(u + v) % p for u, v in zip(dx, dy)])
            prod_ = [0] * (2 * k - 1)
            for i, u in enumerate(dx):
                if u:
                    for j, v in enumerate(dy):
                        prod_[i + j] = (prod_[i + j] + u * v) % p
            # reduce modulo the monic modulus, highest degree first
            for top in range(2 * k - 2, k - 1, -1):
                c = prod_[top]
                if c:
                    for i, m in enumerate(modulus):
                        prod_[top - k + i] = (prod_[top - k + i] - c * m) % p
            mul[x, y] = code(prod_[:k])
    return add, mul


def _make_field(p, k, modulus, add, mul):
    q = p**k
    neg = tuple(int(np.flatnonzero(add[x] == 0)[0]) for x in range(q))
    inv = (0,) + tuple(int(np.flatnonzero(mul[x] == 1)[0]) for x in range(1, q))
    return FieldSpec(p, k, tuple(modulus), add=add, mul=mul, neg=neg, inv=inv)


@lru_cache(maxsize=None)
def _build_field(p, k):
    if k == 1:
        add, mul = _prime_field_tables(p)
        return _make_field(p, 1, (0, 1), add, mul)
    base = _build_field(p, 1)
    modulus = irreducibles(base, k, budget=max(default_budget(), p**k))[0]
    if not is_irreducible(modulus):
        raise ArithmeticError(f"modulus {modulus} failed the trial-division check")
    add, mul = _tables_from_modulus(p, k, modulus.coeffs)
    return _make_field(p, k, modulus.coeffs, add, mul)


def build_field(p: int, k: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """GF(p^k), using the least monic irreducible of degree ``k`` as modulus."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError(f"extension degree must be >= 1, got {k}")
    if p**k > max_order:
        raise BudgetExceeded(p**k, max_order, "field order")
    return _build_field(p, k)


def field_of_order(q: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    pk = prime_power(q)
    if pk is None:
        raise DomainError(f"{q} is not a prime power")
    return build_field(*pk, max_order=max_order)


def parse_field(text: str, max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """Parse ``"2"``, ``"4=2^2"`` or ``"2^2"``."""
    m = re.fullmatch(r"\s*(?:(\d+)\s*=\s*)?(\d+)(?:\s*\^\s*(\d+))?\s*", text)
    if not m:
        raise DomainError(f"cannot parse field spec {text!r}")
    stated, p, k = m.group(1), int(m.group(2)), int(m.group(3) or 1)
    if m.group(3) is None and stated is None:
        return field_of_order(p, max_order)
    if stated is not None and int(stated) != p**k:
        raise DomainError(f"field spec {text!r} is inconsistent")
    return build_field(p, k, max_order)


# -- polynomial kernels on coefficient tuples ------------------------------

def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(F, a, b):
    add = F.add
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = int(add[out[i], v])
    return _strip(out)


def _pneg(F, a):
    return tuple(F.neg[x] for x in a)


def _pmul(F, a, b):
    if not a or not b:
        return ()
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            row = mul[u]
            for j, v in enumerate(b):
                if v:
                    out[i + j] = int(add[out[i + j], row[v]])
    return _strip(out)


def _pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    add, mul, neg = F.add, F.mul, F.neg
    db = len(b) - 1
    lead_inv = F.inv[b[-1]]
    rem = list(a)
    if len(rem) <= db:
        return (), _strip(rem)
    quo = [0] * (len(rem) - db)
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if not c:
            continue
        c = int(mul[c, lead_inv])
        quo[top - db] = c
        nc = neg[c]
        row = mul[nc]
        base = top - db
        for i, v in enumerate(b):
            if v:
                rem[base + i] = int(add[rem[base + i], row[v]])
    return _strip(quo), _strip(rem[:db])


def _monic_index(q, cs):
    """Index of a monic coefficient tuple among monic polys of its degree."""
    idx = 0
    for c in reversed(cs[:-1]):
        idx = idx * q + c
    return idx


def _monic_from_index(q, n, idx):
    cs = []
    for _ in range(n):
        idx, r = divmod(idx, q)
        cs.append(r)
    cs.append(1)
    return tuple(cs)


class GFPoly:
    """Polynomial over a :class:`FieldSpec`; coefficients from ``x^0`` upward."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        q = field.q
        cs = _strip(int(c) for c in coeffs)
        if any(c < 0 or c >= q for c in cs):
            raise DomainError(f"coefficients must be field codes in [0, {q})")
        self.coeffs = cs

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_index(cls, field, n, idx):
        """The monic polynomial of degree ``n`` with the given index."""
        return cls._raw(field, _monic_from_index(field.q, n, idx))

    @classmethod
    def parse(cls, text, field):
        return parse_poly(text, field)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def index(self):
        if not self.is_monic():
            raise DomainError("index is defined for monic polynomials")
        return _monic_index(self.field.q, self.coeffs)

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def _same_field(self, other):
        if not isinstance(other, GFPoly):
            return False
        if other.field != self.field:
            raise DomainError("polynomials live over different fields")
        return True

    def __eq__(self, other):
        if not isinstance(other, GFPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __lt__(self, other):
        self._same_field(other)
        return self.sort_key() < other.sort_key()

    def __add__(self, other):
        if not self._same_field(other):
            return NotImplemented
        return GFPoly._raw(self.field, _padd(self.field, self.coeffs, other.coeffs))

    def __neg__(self):
        return GFPoly._raw(self.field, _pneg(self.field, self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self._same_field(other):
            return NotImplemented
        return GFPoly._raw(self.field, _pmul(self.field, self.coeffs, other.coeffs))

    def __pow__(self, e):
        result = GFPoly._raw(self.field, (1,))
        for _ in range(e):
            result = result * self
        return result

    def __divmod__(self, other):
        self._same_field(other)
        qu, r = _pdivmod(self.field, self.coeffs, other.coeffs)
        return GFPoly._raw(self.field, qu), GFPoly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.field.inv[self.coeffs[-1]]
        row = self.field.mul[inv]
        return GFPoly._raw(self.field, tuple(int(row[c]) for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms)

    def __repr__(self):
        return f"GFPoly({self}, GF({self.field}))"


_TERM = re.compile(r"^(\d+)?\*?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, field: FieldSpec) -> GFPoly:
    """Parse ``"x^6+x^4+x^3+x"`` or ``"2*x^2+x+1"``; coefficients are field codes."""
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty polynomial")
    coeffs = {}
    for term in s.split("+"):
        m = _TERM.match(term)
        if not term or not m or not (m.group(1) or m.group(2)):
            raise DomainError(f"cannot parse term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if c >= field.q:
            raise DomainError(f"coefficient {c} is not a code of GF({field})")
        e = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[e] = int(field.add[coeffs.get(e, 0), c])
    top = max(coeffs)
    return GFPoly(field, [coeffs.get(i, 0) for i in range(top + 1)])


def poly_gcd(a: GFPoly, b: GFPoly) -> GFPoly:
    """Monic gcd by the Euclidean algorithm (gcd(0, 0) is 0)."""
    a._same_field(b)
    F = a.field
    x, y = a.coeffs, b.coeffs
    while y:
        x, y = y, _pdivmod(F, x, y)[1]
    return GFPoly._raw(F, x).monic()


def _gf2_gcd(a, b):
    """gcd of GF(2) polynomials packed into ints (bit i = coefficient of x^i)."""
    while b:
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        a, b = b, a
    return a


# -- enumeration ------------------------------------------------------------

def enumerate_monic(field: FieldSpec, n: int, budget=None):
    """Yield the ``q^n`` monic polynomials of degree ``n`` in the total order."""
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    count = field.q**n
    _check_budget(count, budget, f"monic polynomials of degree {n} over GF({field})")
    for idx in range(count):
        yield GFPoly.from_index(field, n, idx)


def _digit_matrix(q, m):
    """Rows are all monic polys of degree ``m``: their ``m`` low coefficients."""
    idx = np.arange(q**m, dtype=np.int64)
    out = np.empty((q**m, m), dtype=np.int64)
    for i in range(m):
        out[:, i] = idx % q
        idx //= q
    return out


def _multiples(field, s, n, H):
    """Indices of ``s * h`` over all monic ``h`` of degree ``n - deg(s)``.

    ``H`` is the digit matrix of those ``h``; row order is preserved.
    """
    q = field.q
    add, mul = field.add, field.mul
    k = len(s) - 1
    m = n - k
    C = np.zeros((H.shape[0], n), dtype=np.int64)
    for j, sj in enumerate(s):
        if not sj:
            continue
        if m:
            hi = min(j + m, n)
            C[:, j:hi] = add[C[:, j:hi], mul[sj][H[:, : hi - j]]]
        if j + m < n:
            C[:, j + m] = add[C[:, j + m], sj]
    weights = q ** np.arange(n, dtype=np.int64)
    return C @ weights


@lru_cache(maxsize=None)
def _irreducible_indices(field, n):
    """Sorted indices of the monic irreducibles of degree ``n``.

    A multiplicative sieve: every product ``s * h`` with ``s`` irreducible of
    degree ``<= n/2`` is marked composite, which is trial division by those
    ``s`` read the other way round.
    """
    q = field.q
    if n == 1:
        return np.arange(q, dtype=np.int64)
    composite = np.zeros(q**n, dtype=bool)
    for k in range(1, n // 2 + 1):
        H = _digit_matrix(q, n - k)
        for sidx in _irreducible_indices(field, k):
            s = _monic_from_index(q, k, int(sidx))
            composite[_multiples(field, s, n, H)] = True
    return np.flatnonzero(~composite)


def irreducibles(field: FieldSpec, n: int, budget=None) -> list:
    """All monic irreducibles of degree ``n``, in the total order."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    _check_budget(field.q**n, budget, f"degree-{n} sieve over GF({field})")
    return [GFPoly.from_index(field, n, int(i)) for i in _irreducible_indices(field, n)]


class Factorization:
    """Sorted ``(irreducible, multiplicity)`` pairs of a monic polynomial."""

    __slots__ = ("field", "factors")

    def __init__(self, field, factors):
        self.field = field
        self.factors = tuple(sorted(factors, key=lambda f: f[0].sort_key()))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        if not isinstance(other, Factorization):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def expand(self) -> GFPoly:
        result = GFPoly._raw(self.field, (1,))
        for s, m in self.factors:
            result = result * s**m
        return result

    def multiplicity(self, s):
        for t, m in self.factors:
            if t == s:
                return m
        return 0

    def degree_counts(self):
        """``{j: f_j}``: number of degree-``j`` factors counted with multiplicity."""
        out = {}
        for s, m in self.factors:
            out[s.degree] = out.get(s.degree, 0) + m
        return out

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for s, m in self.factors:
            body = f"({s})" if "+" in str(s) else str(s)
            parts.append(body if m == 1 else f"{body}^{m}")
        return "*".join(parts)

    def __repr__(self):
        return f"Factorization({self})"


def factorize(p: GFPoly) -> Factorization:
    """Factor a monic polynomial by trial division with cached irreducibles."""
    if not p.is_monic():
        raise DomainError(f"factorize needs a monic polynomial, got {p}")
    F = p.field
    rem = p.coeffs
    found = []
    k = 1
    while 2 * k <= len(rem) - 1:
        for sidx in _irreducible_indices(F, k):
            if 2 * k > len(rem) - 1:
                break
            s = _monic_from_index(F.q, k, int(sidx))
            mult = 0
            while True:
                quo, r = _pdivmod(F, rem, s)
                if r:
                    break
                rem = quo
                mult += 1
            if mult:
                found.append((GFPoly._raw(F, s), mult))
        k += 1
    if len(rem) > 1:
        found.append((GFPoly._raw(F, rem), 1))
    return Factorization(F, found)


def is_irreducible(p: GFPoly) -> bool:
    if p.degree < 1:
        return False
    fac = factorize(p.monic())
    return len(fac) == 1 and fac.factors[0][1] == 1


# -- bulk factorisation for the brute-force oracles -------------------------

class FactorTable:
    """Factorisations of every monic polynomial of degree ``<= max_degree``.

    Built by a smallest-factor sieve, so a whole degree is factored with a
    few vectorised passes. Irreducibles are identified by ``(degree, index)``.
    Use :func:`factor_table`, which caches one table per field.
    """

    def __init__(self, field, max_degree=0):
        self.field = field
        self.max_degree = -1
        self._facs = []  # per degree: list of {irr_id: mult}
        self.extend(max_degree)

    def extend(self, max_degree):
        q = self.field.q
        for n in range(self.max_degree + 1, max_degree + 1):
            if n == 0:
                self._facs.append([{}])
                self.max_degree = 0
                continue
            size = q**n
            spf = np.full(size, -1, dtype=np.int64)
            quo = np.zeros(size, dtype=np.int64)
            for k in range(1, n // 2 + 1):
                H = _digit_matrix(q, n - k)
                hidx = np.arange(H.shape[0], dtype=np.int64)
                for sidx in _irreducible_indices(self.field, k):
                    s = _monic_from_index(q, k, int(sidx))
                    idx = _multiples(self.field, s, n, H)
                    fresh = spf[idx] < 0
                    spf[idx[fresh]] = k * size + int(sidx)  # packed (deg, idx)
                    quo[idx[fresh]] = hidx[fresh]
            facs = []
            lower = self._facs
            spf_l = spf.tolist()
            quo_l = quo.tolist()
            for idx in range(size):
                code = spf_l[idx]
                if code < 0:
                    facs.append({(n, idx): 1})
                    continue
                k, sidx = divmod(code, size)
                f = dict(lower[n - k][quo_l[idx]])
                key = (k, sidx)
                f[key] = f.get(key, 0) + 1
                facs.append(f)
            self._facs.append(facs)
            self.max_degree = n
        return self

    def of_degree(self, n):
        """List indexed by monic index: ``{(deg, idx): multiplicity}``."""
        if n > self.max_degree:
            self.extend(n)
        return self._facs[n]

    def factorization(self, p: GFPoly) -> Factorization:
        f = self.of_degree(p.degree)[p.index]
        return Factorization(
            self.field,
            [(GFPoly.from_index(self.field, k, i), m) for (k, i), m in f.items()],
        )


_TABLES = {}


def factor_table(field, max_degree):
    table = _TABLES.get(field)
    if table is None:
        table = _TABLES[field] = FactorTable(field)
    if table.max_degree < max_degree:
        table.extend(max_degree)
    return table


# -- brute-force oracles ----------------------------------------------------

def _weight_cache(w):
    cache = {}

    def lookup(mvec):
        v = cache.get(mvec)
        if v is None:
            v = Fraction(w.evaluate(mvec))
            v = v.numerator if v.denominator == 1 else v
            cache[mvec] = v
        return v

    return lookup


def _tuple_weight(facs, d, wl):
    if d == 1:
        wt = 1
        for m in facs[0].values():
            wt *= wl((m,))
            if not wt:
                return 0
        return wt
    mults = {}
    for i, f in enumerate(facs):
        for s, m in f.items():
            v = mults.get(s)
            if v is None:
                v = mults[s] = [0] * d
            v[i] = m
    wt = 1
    for v in mults.values():
        wt *= wl(tuple(v))
        if not wt:
            return 0
    return wt


def _tuples(field, nvec, budget, what):
    nvec = DegreeVec(nvec)
    _check_budget(field.q ** nvec.total(), budget, what)
    table = factor_table(field, max(nvec))
    return nvec, product(*(table.of_degree(n) for n in nvec))


def brute_alpha(field: FieldSpec, nvec, w, budget=None) -> Fraction:
    """Sum of ``wt(p)`` over all d-tuples of monic polynomials of degree ``nvec``."""
    nvec, tuples = _tuples(field, nvec, budget, "tuple enumeration")
    if w.d != len(nvec):
        raise DomainError(f"weight dimension {w.d} != tuple length {len(nvec)}")
    wl = _weight_cache(w)
    d = len(nvec)
    total = 0
    for facs in tuples:
        total += _tuple_weight(facs, d, wl)
    return Fraction(total)


def brute_expected_fj(field: FieldSpec, nvec, j: int, w, budget=None) -> Fraction:
    """Weighted mean of ``f_j(p_1)`` over d-tuples of degree ``nvec``."""
    if j < 1:
        raise DomainError(f"factor degree must be >= 1, got {j}")
    nvec, tuples = _tuples(field, nvec, budget, "tuple enumeration")
    wl = _weight_cache(w)
    d = len(nvec)
    num = den = 0
    for facs in tuples:
        wt = _tuple_weight(facs, d, wl)
        if wt:
            den += wt
            fj = sum(m for (k, _), m in facs[0].items() if k == j)
            num += fj * wt
    if not den:
        raise DomainError("total weight is zero, the distribution is undefined")
    return Fraction(num) / Fraction(den)


def brute_qt_polynomial(field: FieldSpec, n: int, budget=None) -> UniPoly:
    """``sum_{deg p = n} t^{f(p)}`` with ``f`` the number of factors with multiplicity."""
    _check_budget(field.q**n, budget, f"monic polynomials of degree {n}")
    counts = {}
    for f in factor_table(field, n).of_degree(n):
        e = sum(f.values())
        counts[e] = counts.get(e, 0) + 1
    return UniPoly(counts, var="t")


def brute_gcd_power_free(field: FieldSpec, nvec, r: int, budget=None) -> int:
    """Count d-tuples whose gcd has no irreducible factor of multiplicity ``>= r``.

    Works from the Euclidean gcd of the tuple, never from multiplicity
    vectors, so it checks :func:`brute_alpha` independently.
    """
    nvec = DegreeVec(nvec)
    _check_budget(field.q ** nvec.total(), budget, "tuple enumeration")
    q = field.q
    ok_cache = {}

    def gcd_ok(g):
        ok = ok_cache.get(g)
        if ok is None:
            fac = factorize(GFPoly._raw(field, g))
            ok = ok_cache[g] = all(m < r for _, m in fac)
        return ok

    count = 0
    if field.p == 2 and field.k == 1:
        ranges = [range(1 << n, 2 << n) for n in nvec]
        for tup in product(*ranges):
            g = tup[0]
            for b in tup[1:]:
                g = _gf2_gcd(g, b)
                if g == 1:
                    break
            if g == 1:
                count += 1
                continue
            key = tuple((g >> i) & 1 for i in range(g.bit_length()))
            count += gcd_ok(key)
        return count
    ranges = [range(q**n) for n in nvec]
    for idxs in product(*ranges):
        g = _monic_from_index(q, nvec[0], idxs[0])
        for n, i in zip(nvec[1:], idxs[1:]):
            g = poly_gcd(GFPoly._raw(field, g), GFPoly.from_index(field, n, i)).coeffs
        count += gcd_ok(g)
    return count
