"""Weight functions on multiplicity vectors and their generating series.

A weight function assigns a rational ``w(n)`` to every ``n`` in ``N^d`` with
``w(0) = 1``. The named kinds are the indicator weights whose counts have
closed forms; ``table`` covers arbitrary finitely supported weights.

Text form (used by the command line)::

    rfree:r=2,d=1      min(n) < r               (r-th power free gcd)
    mod:m=3,r=1,d=2    min(n) mod m in {0..r-1}
    monoid:a=2,b=3     n in {a*i + b*j}         (d = 1 only)
    all-one:d=1        every n
    table:@w.json      {"d": 1, "entries": [{"n": [2], "w": "1/2"}, ...]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd

from .errors import DomainError, ShapeError
from .numbertheory import DegreeVec
from .series import MultiSeries, series_inverse

KINDS = ("rfree", "mod", "monoid", "all-one", "table")


def monoid_member(a: int, b: int, n: int) -> bool:
    """True iff ``n = a*i + b*j`` for some ``i, j >= 0``."""
    if a < 1 or b < 1:
        raise DomainError(f"generators must be positive, got {a}, {b}")
    if gcd(a, b) != 1:
        raise DomainError(f"generators {a}, {b} are not coprime")
    if n < 0:
        return False
    return any((n - a * i) % b == 0 for i in range(n // a + 1))


def _parse_rational(v):
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, float):
        raise DomainError(f"weights must be exact, got float {v}")
    return Fraction(v)


class WeightFn:
    """Immutable weight function; construct through the classmethods or :meth:`parse`."""

    __slots__ = ("kind", "d", "params", "_table", "source")

    def __init__(self, kind, d, params=None, table=None, source=None):
        if kind not in KINDS:
            raise DomainError(f"unknown weight kind {kind!r}")
        if d < 1:
            raise DomainError(f"dimension must be >= 1, got {d}")
        self.kind = kind
        self.d = d
        self.params = dict(params or {})
        self._table = table
        self.source = source

    @classmethod
    def min_lt_r(cls, r, d=1):
        if r < 1:
            raise DomainError(f"r must be >= 1 so that w(0) = 1, got {r}")
        return cls("rfree", d, {"r": r})

    @classmethod
    def residue_window(cls, m, r, d=1):
        if not 1 <= r < m:
            raise DomainError(f"need 1 <= r < m, got r={r}, m={m}")
        return cls("mod", d, {"m": m, "r": r})

    @classmethod
    def monoid_ab(cls, a, b):
        if a < 1 or b < 1 or gcd(a, b) != 1:
            raise DomainError(f"monoid generators must be coprime positives, got {a}, {b}")
        return cls("monoid", 1, {"a": a, "b": b})

    @classmethod
    def all_one(cls, d=1):
        return cls("all-one", d)

    @classmethod
    def table(cls, entries, d, source=None):
        """Finitely supported weights; absent points weigh 0, ``w(0)`` is 1.

        ``entries`` maps degree vectors (or ints when ``d == 1``) to rationals.
        An explicit entry at the origin must equal 1.
        """
        tab = {}
        for n, v in dict(entries).items():
            key = DegreeVec(n)
            if key.d != d:
                raise ShapeError(f"table key {tuple(key)} is not {d}-dimensional")
            tab[tuple(key)] = _parse_rational(v)
        zero = (0,) * d
        if tab.setdefault(zero, Fraction(1)) != 1:
            raise DomainError(f"w(0) must be 1, table has {tab[zero]}")
        return cls("table", d, table={k: v for k, v in tab.items() if v}, source=source)

    @classmethod
    def from_json(cls, data, source=None):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            d = int(data["d"])
            entries = {tuple(e["n"]): e["w"] for e in data["entries"]}
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed weight table: {exc}") from exc
        return cls.table(entries, d, source=source)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh), source=str(path))

    @classmethod
    def parse(cls, text):
        """Parse the command-line mini-language (see module docstring)."""
        text = text.strip()
        kind, _, rest = text.partition(":")
        kind = kind.strip().lower()
        if kind == "table":
            rest = rest.strip()
            if rest.startswith("@"):
                return cls.load(rest[1:])
            return cls.from_json(rest)
        params = {}
        if rest.strip():
            for part in rest.split(","):
                m = re.fullmatch(r"\s*([a-z]+)\s*=\s*(\d+)\s*", part)
                if not m:
                    raise DomainError(f"cannot parse {part!r} in weight spec {text!r}")
                params[m.group(1)] = int(m.group(2))
        expected = {
            "rfree": {"r", "d"},
            "mod": {"m", "r", "d"},
            "monoid": {"a", "b"},
            "all-one": {"d"},
        }.get(kind)
        if expected is None:
            raise DomainError(f"unknown weight kind {kind!r} in {text!r}")
        extra = set(params) - expected
        if extra:
            raise DomainError(f"unexpected parameters {sorted(extra)} for {kind}")
        try:
            if kind == "rfree":
                return cls.min_lt_r(params["r"], params.get("d", 1))
            if kind == "mod":
                return cls.residue_window(params["m"], params["r"], params.get("d", 1))
            if kind == "monoid":
                return cls.monoid_ab(params["a"], params["b"])
        except KeyError as exc:
            raise DomainError(f"missing parameter {exc} in {text!r}") from None
        return cls.all_one(params.get("d", 1))

    def spec(self):
        """Canonical text form; :meth:`parse` inverts it."""
        p = self.params
        if self.kind == "rfree":
            return f"rfree:r={p['r']},d={self.d}"
        if self.kind == "mod":
            return f"mod:m={p['m']},r={p['r']},d={self.d}"
        if self.kind == "monoid":
            return f"monoid:a={p['a']},b={p['b']}"
        if self.kind == "all-one":
            return f"all-one:d={self.d}"
        if self.source:
            return f"table:@{self.source}"
        return "table:" + json.dumps(self.to_json(), separators=(",", ":"))

    def to_json(self):
        if self.kind != "table":
            raise DomainError("only table weights have a JSON form")
        return {
            "d": self.d,
            "entries": [{"n": list(k), "w": str(v)} for k, v in sorted(self._table.items())],
        }

    def __str__(self):
        return self.spec()

    def __repr__(self):
        return f"WeightFn({self.spec()!r})"

    def __eq__(self, other):
        if not isinstance(other, WeightFn):
            return NotImplemented
        return (self.kind, self.d, self.params, self._table) == (
            other.kind, other.d, other.params, other._table)

    def __hash__(self):
        return hash((self.kind, self.d, tuple(sorted(self.params.items()))))

    def evaluate(self, n) -> Fraction:
        n = DegreeVec(n)
        if n.d != self.d:
            raise ShapeError(f"weight is {self.d}-dimensional, got {tuple(n)}")
        p = self.params
        if self.kind == "rfree":
            return Fraction(int(min(n) < p["r"]))
        if self.kind == "mod":
            return Fraction(int(min(n) % p["m"] < p["r"]))
        if self.kind == "monoid":
            return Fraction(int(monoid_member(p["a"], p["b"], n[0])))
        if self.kind == "all-one":
            return Fraction(1)
        return self._table.get(tuple(n), Fraction(0))

    __call__ = evaluate


def weight_series(w: WeightFn, caps) -> MultiSeries:
    """``g(z) = sum_n w(n) z^n`` on the box ``[0, caps]``."""
    caps = DegreeVec(caps)
    if caps.d != w.d:
        raise ShapeError(f"box {tuple(caps)} does not match weight dimension {w.d}")
    return MultiSeries.from_function(caps, w.evaluate)


def rational_weight_series(w: WeightFn, caps) -> MultiSeries:
    """The closed rational form of ``g`` for the named kinds, expanded on the box.

    rfree: (1 - (z_1..z_d)^r) / prod(1 - z_i); mod: that over 1 - (z_1..z_d)^m;
    monoid: (1 - z^{ab}) / ((1 - z^a)(1 - z^b)); all-one: 1 / prod(1 - z_i).
    """
    caps = DegreeVec(caps)
    d = caps.d
    one = MultiSeries.one(caps)

    def diag(e):
        return MultiSeries.monomial(caps, (e,) * d)

    den = one
    for i in range(d):
        den = den * (one - MultiSeries.monomial(caps, tuple(int(j == i) for j in range(d))))
    p = w.params
    if w.kind == "all-one":
        num = one
    elif w.kind == "rfree":
        num = one - diag(p["r"])
    elif w.kind == "mod":
        num = one - diag(p["r"])
        den = den * (one - diag(p["m"]))
    elif w.kind == "monoid":
        a, b = p["a"], p["b"]
        num = one - diag(a * b)
        den = (one - diag(a)) * (one - diag(b))
    else:
        raise DomainError("table weights have no closed rational form")
    return num * series_inverse(den)
