"""Elementary number theory: Moebius function, divisors, irreducible counts."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError
from .exactalg import UniPoly


class DegreeVec(tuple):
    """Immutable vector of nonnegative integers ``(n_1, ..., n_d)``.

    Being a tuple, it is hashable and can be used directly as a series key.
    """

    def __new__(cls, entries):
        if isinstance(entries, int):
            entries = (entries,)
        vals = tuple(int(e) for e in entries)
        if not vals:
            raise DomainError("a degree vector needs at least one entry")
        if any(v < 0 for v in vals):
            raise DomainError(f"negative entry in degree vector {vals}")
        return super().__new__(cls, vals)

    @property
    def d(self):
        return len(self)

    def total(self):
        return sum(self)

    def gcd(self):
        if not any(self):
            raise DomainError("gcd of the zero vector is undefined")
        g = 0
        for v in self:
            g = gcd(g, v)
        return g

    def min(self):
        return min(self)

    def __repr__(self):
        return f"DegreeVec({tuple(self)!r})"


def _factor(n):
    """Trial-division factorisation as a dict prime -> exponent."""
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius(n: int) -> int:
    if n < 1:
        raise DomainError(f"moebius is defined for n >= 1, got {n}")
    exps = _factor(n)
    if any(e > 1 for e in exps.values()):
        return 0
    return -1 if len(exps) % 2 else 1


def divisors(n: int) -> list[int]:
    if n < 1:
        raise DomainError(f"divisors are defined for n >= 1, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    return n >= 2 and _factor(n) == {n: 1}


def prime_power(q: int):
    """Return ``(p, k)`` with ``q == p**k`` for a prime power, else None."""
    if q < 2:
        return None
    f = _factor(q)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def count_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree ``n`` over F_q."""
    if q < 2:
        raise DomainError(f"field order must be >= 2, got {q}")
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    total = sum(moebius(n // k) * q**k for k in divisors(n))
    m, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(f"inexact division computing M({q},{n})")
    return m


@lru_cache(maxsize=None)
def count_irreducibles_symbolic(n: int) -> UniPoly:
    """``M(q, n)`` as a polynomial in a symbolic ``q``."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    return UniPoly({k: Fraction(moebius(n // k), n) for k in divisors(n)})
