"""Exact coefficient rings: rationals, Q[q] and Q[q, t].

Rationals are plain :class:`fractions.Fraction`. The polynomial rings are
sparse maps from exponents to nonzero rationals; all arithmetic is exact and
interoperates with ``int`` and ``Fraction`` scalars, so the series code can
treat every ring through ordinary Python operators.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from .errors import DomainError

_SCALARS = (int, Fraction)


def _fmt_coeff_term(coeff, mono, first):
    """Render ``coeff * mono`` as part of a sum (sign handled here)."""
    neg = coeff < 0
    mag = -coeff if neg else coeff
    if not mono:
        body = str(mag)
    elif mag == 1:
        body = mono
    else:
        body = f"{mag}*{mono}"
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


class _SparsePoly:
    """Shared machinery; subclasses fix the key type and variable names."""

    __slots__ = ("_c",)

    # -- subclass hooks -------------------------------------------------
    def _key_add(self, a, b):
        raise NotImplementedError

    def _zero_key(self):
        raise NotImplementedError

    def _check_key(self, key):
        raise NotImplementedError

    def _coerce(self, other):
        """Return ``other`` as an instance of this ring, or None."""
        raise NotImplementedError

    def _new(self, coeffs):
        obj = object.__new__(type(self))
        obj._c = coeffs
        return obj

    # -- construction helpers ------------------------------------------
    def _init_from(self, coeffs):
        c = {}
        if coeffs is None:
            items = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        for key, val in items:
            key = self._check_key(key)
            val = Fraction(val)
            if val:
                c[key] = c.get(key, 0) + val
        self._c = {k: v for k, v in c.items() if v}

    # -- container protocol --------------------------------------------
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return self._c.items()

    def coeff(self, key):
        return self._c.get(key, Fraction(0))

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def constant_term(self):
        return self._c.get(self._zero_key(), Fraction(0))

    def is_constant(self):
        return all(k == self._zero_key() for k in self._c)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return self._new(c)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return self._new({})
            return self._new({k: v * other for k, v in self._c.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = {}
        for ka, va in self._c.items():
            for kb, vb in o._c.items():
                k = self._key_add(ka, kb)
                c[k] = c.get(k, 0) + va * vb
        return self._new({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"only nonnegative integer powers, got {e!r}")
        result = self._coerce(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._c.items()))


class UniPoly(_SparsePoly):
    """Polynomial in one variable (``q`` by default) with rational coefficients.

    ``UniPoly({2: 1, 1: -1})`` is ``q^2 - q``. A sequence argument is read
    as coefficients from the constant term upward.
    """

    __slots__ = ("var",)

    def __init__(self, coeffs=None, var="q"):
        self.var = var
        self._init_from(coeffs)

    def _new(self, coeffs):
        obj = super()._new(coeffs)
        obj.var = self.var
        return obj

    @classmethod
    def gen(cls, var="q"):
        return cls({1: 1}, var=var)

    @classmethod
    def monomial(cls, exp, coeff=1, var="q"):
        return cls({exp: coeff}, var=var)

    def _key_add(self, a, b):
        return a + b

    def _zero_key(self):
        return 0

    def _check_key(self, key):
        key = int(key)
        if key < 0:
            raise DomainError(f"negative exponent {key} in UniPoly")
        return key

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.var == self.var:
                return other
            if other.is_constant() or self.is_constant():
                return UniPoly(other._c, var=self.var)
            return None
        if isinstance(other, _SCALARS):
            return UniPoly({0: other} if other else {}, var=self.var)
        return None

    @property
    def degree(self):
        return max(self._c) if self._c else -1

    def min_exponent(self):
        return min(self._c) if self._c else None

    def evaluate(self, x):
        """Exact value at the point ``x`` (an int or Fraction)."""
        x = Fraction(x)
        return sum((v * x**e for e, v in self._c.items()), Fraction(0))

    __call__ = evaluate

    def to_bipoly(self):
        if self.var == "t":
            return BiPoly({(0, e): v for e, v in self._c.items()})
        return BiPoly({(e, 0): v for e, v in self._c.items()})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            parts.append(_fmt_coeff_term(self._c[e], mono, not parts))
        return "".join(parts)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


class BiPoly(_SparsePoly):
    """Polynomial in ``q`` and ``t``; keys are ``(exp_q, exp_t)``."""

    __slots__ = ()

    def __init__(self, coeffs=None):
        self._init_from(coeffs)

    @classmethod
    def q(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    def _key_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _zero_key(self):
        return (0, 0)

    def _check_key(self, key):
        i, j = (int(x) for x in key)
        if i < 0 or j < 0:
            raise DomainError(f"negative exponent {key} in BiPoly")
        return (i, j)

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return other.to_bipoly()
        if isinstance(other, _SCALARS):
            return BiPoly({(0, 0): other} if other else {})
        return None

    def swap(self):
        """Exchange the roles of ``q`` and ``t``."""
        return BiPoly({(j, i): v for (i, j), v in self._c.items()})

    def is_symmetric(self):
        return self == self.swap()

    def eval_q(self, x):
        """Specialise ``q = x``; the result is a polynomial in ``t``."""
        x = Fraction(x)
        out = {}
        for (i, j), v in self._c.items():
            out[j] = out.get(j, 0) + v * x**i
        return UniPoly(out, var="t")

    def eval_t(self, x):
        """Specialise ``t = x``; the result is a polynomial in ``q``."""
        x = Fraction(x)
        out = {}
        for (i, j), v in self._c.items():
            out[i] = out.get(i, 0) + v * x**j
        return UniPoly(out, var="q")

    def evaluate(self, q, t):
        return self.eval_q(q).evaluate(t)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, j in sorted(self._c, key=lambda k: (k[0] + k[1], k[0]), reverse=True):
            factors = []
            if i:
                factors.append("q" if i == 1 else f"q^{i}")
            if j:
                factors.append("t" if j == 1 else f"t^{j}")
            parts.append(_fmt_coeff_term(self._c[(i, j)], "*".join(factors), not parts))
        return "".join(parts)

    def __repr__(self):
        return f"BiPoly({str(self)!r})"

