"""Box-truncated multivariate formal power series.

A :class:`MultiSeries` in ``d`` variables keeps the coefficients of
``z^k`` for every exponent vector ``0 <= k <= caps`` (componentwise).
Coefficients may live in any of the exact rings of :mod:`cyclopoly.exactalg`
(or be plain ``Fraction``/``int``); only ``+``, ``*`` and multiplication by
rationals are needed.

Products, inverses, logarithms and exponentials are exact on the box: the
coefficient at ``k`` only ever depends on coefficients at exponents ``<= k``.
``log`` and ``exp`` use the Euler-operator recurrences
``D(log f) = Df / f`` and ``D(exp g) = exp(g) Dg`` with
``D z^k = |k| z^k``, which avoids summing power series of series.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

from .errors import DomainError, ShapeError
from .exactalg import UniPoly
from .numbertheory import DegreeVec, count_irreducibles, count_irreducibles_symbolic, divisors, moebius


def box(caps):
    """Iterate over every exponent vector in the box, lexicographically.

    Lexicographic order visits ``k - j`` before ``k`` for any ``j > 0``,
    which is what the triangular recurrences below rely on.
    """
    return product(*(range(c + 1) for c in caps))


def _le(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _is_zero_key(k):
    return not any(k)


class MultiSeries:
    """Formal power series in ``d`` variables, truncated to the box ``[0, caps]``.

    Coefficients outside the box are unknown, not zero; two series compare
    equal when they share ``caps`` and agree on the whole box. Keys outside
    the box are dropped on construction.
    """

    __slots__ = ("caps", "_c")

    def __init__(self, caps, coeffs=None):
        self.caps = DegreeVec(caps)
        c = {}
        for key, val in (coeffs or {}).items():
            key = (key,) if isinstance(key, int) else tuple(key)
            if len(key) != self.d:
                raise ShapeError(f"key {key} does not have {self.d} entries")
            if not val or not _le(key, self.caps) or any(x < 0 for x in key):
                continue
            c[key] = c[key] + val if key in c else val
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def _raw(cls, caps, coeffs):
        obj = object.__new__(cls)
        obj.caps = caps
        obj._c = coeffs
        return obj

    @classmethod
    def one(cls, caps):
        caps = DegreeVec(caps)
        return cls._raw(caps, {(0,) * len(caps): Fraction(1)})

    @classmethod
    def zero(cls, caps):
        return cls._raw(DegreeVec(caps), {})

    @classmethod
    def monomial(cls, caps, key, coeff=1):
        return cls(caps, {key: coeff})

    @classmethod
    def from_function(cls, caps, fn):
        """Series whose coefficient at ``k`` is ``fn(k)`` for every box point."""
        caps = DegreeVec(caps)
        return cls(caps, {k: fn(k) for k in box(caps)})

    @classmethod
    def from_list(cls, coeffs):
        """Univariate series from a coefficient list; the cap is ``len - 1``."""
        return cls((len(coeffs) - 1,), {(i,): c for i, c in enumerate(coeffs)})

    @property
    def d(self):
        return len(self.caps)

    def __getitem__(self, key):
        key = (key,) if isinstance(key, int) else tuple(key)
        if not _le(key, self.caps):
            raise ShapeError(f"{key} lies outside the box {tuple(self.caps)}")
        return self._c.get(key, 0)

    def items(self):
        return self._c.items()

    def support(self):
        return set(self._c)

    def constant_term(self):
        return self._c.get((0,) * self.d, 0)

    def coefficients(self):
        """Dense list of coefficients (univariate series only)."""
        if self.d != 1:
            raise ShapeError("coefficients() is for univariate series")
        return [self._c.get((i,), 0) for i in range(self.caps[0] + 1)]

    def map_coefficients(self, fn):
        return MultiSeries(self.caps, {k: fn(v) for k, v in self._c.items()})

    def truncate(self, caps):
        caps = DegreeVec(caps)
        if len(caps) != self.d or not _le(caps, self.caps):
            raise ShapeError(f"cannot truncate box {tuple(self.caps)} to {tuple(caps)}")
        return MultiSeries._raw(caps, {k: v for k, v in self._c.items() if _le(k, caps)})

    def _check_shape(self, other):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if self.caps != other.caps:
            raise ShapeError(f"box mismatch: {tuple(self.caps)} vs {tuple(other.caps)}")

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            return self + MultiSeries(self.caps, {(0,) * self.d: other})
        self._check_shape(other)
        c = dict(self._c)
        for k, v in other._c.items():
            s = c[k] + v if k in c else v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return MultiSeries._raw(self.caps, c)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries._raw(self.caps, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        """Multiply every coefficient by the ring element ``c``."""
        if not c:
            return MultiSeries._raw(self.caps, {})
        out = {}
        for k, v in self._c.items():
            p = c * v
            if p:
                out[k] = p
        return MultiSeries._raw(self.caps, out)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"only nonnegative integer powers, got {e!r}")
        result = MultiSeries.one(self.caps)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.caps == other.caps and self._c == other._c

    __hash__ = None

    def __str__(self):
        if not self._c:
            return "0"
        names = ["z"] if self.d == 1 else [f"z{i + 1}" for i in range(self.d)]
        terms = []
        for k in sorted(self._c):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, k) if e
            )
            coeff = str(self._c[k])
            if not mono:
                terms.append(coeff)
            elif coeff == "1":
                terms.append(mono)
            else:
                if " " in coeff or "/" in coeff:
                    coeff = f"({coeff})"
                terms.append(f"{coeff}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"MultiSeries(caps={tuple(self.caps)}, {str(self)})"


def series_add(f: MultiSeries, g: MultiSeries) -> MultiSeries:
    f._check_shape(g)
    return f + g


def series_mul(f: MultiSeries, g: MultiSeries) -> MultiSeries:
    """Truncated product: ``sum_{a+b=k} f_a g_b`` for every box point ``k``."""
    f._check_shape(g)
    caps = f.caps
    out = {}
    gi = list(g._c.items())
    for ka, va in f._c.items():
        for kb, vb in gi:
            k = tuple(x + y for x, y in zip(ka, kb))
            if not _le(k, caps):
                continue
            out[k] = out[k] + va * vb if k in out else va * vb
    return MultiSeries._raw(caps, {k: v for k, v in out.items() if v})


def _unit_inverse(c):
    """Inverse of a constant term that must be a nonzero rational."""
    if isinstance(c, (int, Fraction)):
        if not c:
            raise DomainError("constant term is zero, series is not invertible")
        return 1 / Fraction(c)
    is_const = getattr(c, "is_constant", None)
    if is_const is not None and is_const() and c:
        return 1 / c.constant_term()
    raise DomainError(f"constant term {c} is not a unit")


def series_inverse(f: MultiSeries) -> MultiSeries:
    """The series ``g`` with ``f * g = 1`` on the box."""
    inv0 = _unit_inverse(f.constant_term())
    zero = (0,) * f.d
    tail = [(j, v) for j, v in f._c.items() if j != zero]
    g = {}
    for k in box(f.caps):
        if k == zero:
            g[k] = inv0
            continue
        acc = 0
        for j, fj in tail:
            if _le(j, k):
                gk = g.get(_sub(k, j))
                if gk is not None:
                    acc = acc + fj * gk
        if acc:
            g[k] = -(acc * inv0)
    return MultiSeries._raw(f.caps, g)


def _is_one(c):
    return c == 1


def series_log(f: MultiSeries) -> MultiSeries:
    """Logarithm of a series with constant term exactly 1."""
    if not _is_one(f.constant_term()):
        raise DomainError(f"log needs constant term 1, got {f.constant_term()}")
    zero = (0,) * f.d
    tail = [(j, v) for j, v in f._c.items() if j != zero]
    g = {}
    for k in box(f.caps):
        n = sum(k)
        if n == 0:
            continue
        # |k| g_k = |k| f_k - sum_{0<j<k} |k-j| g_{k-j} f_j
        acc = f._c.get(k, 0) * n
        for j, fj in tail:
            if j != k and _le(j, k):
                r = _sub(k, j)
                gr = g.get(r)
                if gr is not None:
                    acc = acc - fj * gr * sum(r)
        if acc:
            g[k] = acc * Fraction(1, n)
    return MultiSeries._raw(f.caps, g)


def series_exp(f: MultiSeries) -> MultiSeries:
    """Exponential of a series with zero constant term."""
    if f.constant_term():
        raise DomainError(f"exp needs constant term 0, got {f.constant_term()}")
    terms = [(j, v * sum(j)) for j, v in f._c.items()]
    zero = (0,) * f.d
    out = {}
    for k in box(f.caps):
        if k == zero:
            out[k] = Fraction(1)
            continue
        # |k| e_k = sum_{0<j<=k} |j| f_j e_{k-j}
        acc = 0
        for j, wj in terms:
            if _le(j, k):
                e = out.get(_sub(k, j))
                if e is not None:
                    acc = acc + wj * e
        if acc:
            out[k] = acc * Fraction(1, sum(k))
    return MultiSeries._raw(f.caps, out)


def series_log_naive(f: MultiSeries) -> MultiSeries:
    """``log f = sum_k (-1)^(k+1) u^k / k`` with ``u = f - 1``.

    Quadratic in the box size per power; kept as an independent check on
    :func:`series_log`.
    """
    if not _is_one(f.constant_term()):
        raise DomainError(f"log needs constant term 1, got {f.constant_term()}")
    u = f - 1
    result = MultiSeries.zero(f.caps)
    power = MultiSeries.one(f.caps)
    for k in range(1, sum(f.caps) + 1):
        power = power * u
        if not power._c:
            break
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    return result


def series_exp_naive(f: MultiSeries) -> MultiSeries:
    """``exp f = sum_k f^k / k!``; independent check on :func:`series_exp`."""
    if f.constant_term():
        raise DomainError(f"exp needs constant term 0, got {f.constant_term()}")
    result = MultiSeries.one(f.caps)
    power = MultiSeries.one(f.caps)
    fact = 1
    for k in range(1, sum(f.caps) + 1):
        power = power * f
        if not power._c:
            break
        fact *= k
        result = result + power.scale(Fraction(1, fact))
    return result


def substitute_power(f: MultiSeries, k: int) -> MultiSeries:
    """Apply ``z_i -> z_i^k`` to every variable, dropping keys that leave the box."""
    if k < 1:
        raise DomainError(f"substitution power must be >= 1, got {k}")
    if k == 1:
        return f
    out = {}
    for key, v in f._c.items():
        nk = tuple(k * x for x in key)
        if _le(nk, f.caps):
            out[nk] = v
    return MultiSeries._raw(f.caps, out)


def _gcd_key(key):
    return DegreeVec(key).gcd()


def extract_exponents(g: MultiSeries) -> dict:
    """Exponents ``a_i`` with ``g = prod_{i>0} (1 - z^i)^(-a_i)`` on the box.

    Computed from ``b = log g`` by Moebius inversion along each ray:
    ``a_n = sum_{k | gcd(n)} mu(k)/k * b_{n/k}``.
    """
    b = series_log(g)
    a = {}
    for n in box(g.caps):
        if _is_zero_key(n):
            continue
        acc = 0
        for k in divisors(_gcd_key(n)):
            mu = moebius(k)
            if not mu:
                continue
            bn = b._c.get(tuple(x // k for x in n))
            if bn is not None:
                acc = acc + bn * Fraction(mu, k)
        if acc:
            a[n] = acc
    return a


def _log_of_product(a, caps):
    """``sum_i a_i sum_{k>=1} z^(k i) / k`` restricted to the box."""
    caps = DegreeVec(caps)
    out = {}
    for i, ai in a.items():
        i = (i,) if isinstance(i, int) else tuple(i)
        if len(i) != len(caps):
            raise ShapeError(f"exponent key {i} does not match box {tuple(caps)}")
        if _is_zero_key(i) or any(x < 0 for x in i):
            raise DomainError(f"exponent keys must be nonzero and nonnegative, got {i}")
        k = 1
        while True:
            key = tuple(k * x for x in i)
            if not _le(key, caps):
                break
            term = ai * Fraction(1, k)
            out[key] = out[key] + term if key in out else term
            k += 1
    return MultiSeries(caps, out)


def reconstruct_from_exponents(a: dict, caps) -> MultiSeries:
    """Inverse of :func:`extract_exponents`; rational exponents are allowed."""
    return series_exp(_log_of_product(a, caps))


def _binomial_power_series(i, a, caps, scale=1):
    """``(1 - scale * z^i)^(-a)`` truncated, for an integer ``a``.

    Uses the generalised binomial theorem, so no log/exp is involved.
    """
    out = {}
    m = 0
    while True:
        key = tuple(m * x for x in i)
        if not _le(key, caps):
            break
        # coefficient of x^m in (1-x)^(-a) is (-1)^m binom(-a, m)
        if a >= 0:
            c = comb(a + m - 1, m) if m else 1
        else:
            c = (-1) ** m * comb(-a, m)
        if c:
            out[key] = c * scale**m if m else Fraction(1)
        m += 1
        if a < 0 and m > -a:
            break
    return MultiSeries(caps, out)


def cyclotomic_product(q: int, cap: int) -> MultiSeries:
    """``prod_{k=1}^{cap} (1 - z^k)^(-M(q,k))`` truncated at degree ``cap``.

    Built by integer binomial expansion; it should equal ``1/(1 - q z)``.
    """
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    caps = DegreeVec((cap,))
    result = MultiSeries.one(caps)
    for k in range(1, cap + 1):
        result = result * _binomial_power_series((k,), count_irreducibles(q, k), caps)
    return result


def _irreducible_count(q, k):
    if q is None:
        return count_irreducibles_symbolic(k)
    return Fraction(count_irreducibles(q, k))


def alpha_series(g: MultiSeries, q=None, caps=None) -> MultiSeries:
    """Weighted tuple counts ``sum_n alpha_q(n) z^n`` from the weight series ``g``.

    ``q=None`` gives coefficients in Q[q]; an integer ``q`` gives rationals.
    Evaluated as ``exp(sum_k M(q,k) * log(g(z^k)))``, which only needs
    rational arithmetic, so weights with non-integer exponents are fine.
    ``log(g(z^k))`` is the substituted ``log g``; it is computed once.
    """
    if caps is not None:
        g = g.truncate(caps)
    if not _is_one(g.constant_term()):
        raise DomainError(f"weight series needs constant term 1, got {g.constant_term()}")
    log_g = series_log(g)
    total = MultiSeries.zero(g.caps)
    for k in range(1, max(g.caps) + 1):
        sub = substitute_power(log_g, k)
        if sub._c:
            total = total + sub.scale(_irreducible_count(q, k))
    return series_exp(total)


def alpha_series_by_product(g: MultiSeries, q=None, caps=None) -> MultiSeries:
    """Same series as :func:`alpha_series`, via ``prod_i (1 - q z^i)^(-a_i)``.

    Requires every exponent ``a_i`` of ``g`` to be an integer; each factor
    is expanded with the binomial theorem. Serves as a second route.
    """
    if caps is not None:
        g = g.truncate(caps)
    a = extract_exponents(g)
    bad = {i: v for i, v in a.items() if Fraction(v).denominator != 1}
    if bad:
        raise DomainError(f"non-integer exponents {bad}; use alpha_series")
    scale = UniPoly.gen() if q is None else Fraction(q)
    result = MultiSeries.one(g.caps)
    for i in sorted(a):
        result = result * _binomial_power_series(i, int(a[i]), g.caps, scale)
    return result
