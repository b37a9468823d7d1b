"""Verification suites: every count computed along independent routes.

Each ``check_*`` function returns a list of case dicts
``{id, inputs, expected_source, got, pass}``. :func:`run_suite` groups them
into the report ``{suite, cases, pass_count, fail_count}`` printed by
``cyclopoly verify``. Default parameters are the full acceptance ranges;
``quick=True`` shrinks them for smoke runs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .counting import (
    closed_monoid,
    closed_monoid_improved,
    closed_no_mult_one,
    closed_residue,
    closed_rfree_gcd,
    monoid_improved_applies,
    residue_chain_check,
)
from .errors import BudgetExceeded
from .exactalg import UniPoly
from .ffpoly import (
    brute_alpha,
    brute_expected_fj,
    brute_gcd_power_free,
    brute_qt_polynomial,
    default_budget,
    field_of_order,
    irreducibles,
)
from .numbertheory import count_irreducibles
from .series import (
    MultiSeries,
    alpha_series,
    alpha_series_by_product,
    cyclotomic_product,
    extract_exponents,
    reconstruct_from_exponents,
)
from .stats import expected_factor_count, qt_from_matrix, qt_polynomial
from .weights import WeightFn, weight_series

# Published tables of sum_{deg p = n} t^f(p): rows t^n..t, columns q^n..q, scaled by 1/n!.
QT_REFERENCE_MATRICES = {
    2: [[1, 1], [1, -1]],
    3: [[1, 3, 2], [3, -3, 0], [2, 0, -2]],
    4: [[1, 6, 11, 6], [6, 0, -6, 0], [11, -6, 1, -6], [6, 0, -6, 0]],
}

MONOID_PAIRS = ((2, 3), (3, 5), (4, 7))


def _case(cid, inputs, source, got, ok):
    return {
        "id": cid,
        "inputs": inputs,
        "expected_source": source,
        "got": str(got),
        "pass": bool(ok),
    }


def _nvecs(d, max_total):
    """All degree vectors of length ``d`` with total at most ``max_total``."""
    return [n for n in product(range(max_total + 1), repeat=d) if sum(n) <= max_total]


def check_cyclotomic(qs=(2, 3, 5), cap=20):
    cases = []
    for q in qs:
        coeffs = cyclotomic_product(q, cap).coefficients()
        bad = [n for n, c in enumerate(coeffs) if c != q**n]
        cases.append(_case(
            f"cyclotomic:q={q}", {"q": q, "cap": cap}, "1/(1-qz) coefficients q^n",
            f"mismatch at {bad}" if bad else f"q^n for n<={cap}",
            not bad,
        ))
    return cases


def check_irreducible_counts(qs=(2, 3, 4, 5, 7, 8, 9), max_n=8, budget=None):
    budget = default_budget() if budget is None else budget
    cases = []
    for q in qs:
        F = field_of_order(q)
        for n in range(1, max_n + 1):
            if q**n > budget:
                continue
            got = len(irreducibles(F, n, budget=budget))
            want = count_irreducibles(q, n)
            cases.append(_case(
                f"irreducible:q={q},n={n}", {"q": q, "n": n}, "Moebius count M(q,n)",
                got, got == want,
            ))
    return cases


def check_rfree_single(limits=((2, 12), (3, 9)), rs=(1, 2, 3)):
    cases = []
    for q, nmax in limits:
        F = field_of_order(q)
        for r in rs:
            w = WeightFn.min_lt_r(r)
            series = alpha_series(weight_series(w, (nmax,)), q=q)
            for n in range(r, nmax + 1):
                formula = q**n - q ** (n + 1 - r)
                brute = brute_alpha(F, (n,), w)
                closed = closed_rfree_gcd((n,), r).evaluate(q)
                ser = series[(n,)]
                cases.append(_case(
                    f"rfree:q={q},r={r},n={n}", {"q": q, "r": r, "n": n},
                    "q^n - q^(n+1-r) = brute = series", brute,
                    brute == formula == closed == ser,
                ))
    return cases


def check_rfree_tuples(q=2, rs=(1, 2), max_total=16, d=2):
    F = field_of_order(q)
    cases = []
    for r in rs:
        w = WeightFn.min_lt_r(r, d)
        series = alpha_series(weight_series(w, (max_total,) * d), q=q)
        for nvec in _nvecs(d, max_total):
            brute = brute_alpha(F, nvec, w)
            by_gcd = brute_gcd_power_free(F, nvec, r)
            closed = closed_rfree_gcd(nvec, r).evaluate(q)
            ser = series[nvec]
            cases.append(_case(
                f"rfree-gcd:q={q},r={r},n={nvec}", {"q": q, "r": r, "n": list(nvec)},
                "closed = series = brute = euclidean gcd", brute,
                brute == by_gcd == closed == ser,
            ))
    return cases


def check_residue(q=2, params=((2, 1), (3, 1), (3, 2)), dims=(1, 2), max_total=14):
    F = field_of_order(q)
    cases = []
    for d in dims:
        for m, r in params:
            w = WeightFn.residue_window(m, r, d)
            series = alpha_series(weight_series(w, (max_total,) * d), q=q)
            for nvec in _nvecs(d, max_total):
                closed = closed_residue(nvec, r, m).evaluate(q)
                brute = brute_alpha(F, nvec, w)
                ser = series[nvec]
                cases.append(_case(
                    f"residue:d={d},m={m},r={r},n={nvec}",
                    {"q": q, "m": m, "r": r, "n": list(nvec)},
                    "closed = series = brute", brute, closed == ser == brute,
                ))
    return cases


def check_monoid(pairs=MONOID_PAIRS, max_n=60, brute_q=2, brute_max=14, chain_k=5):
    cases = []
    for a, b in pairs:
        for n in range(a * b - a - b + 1, max_n + 1):
            basic = closed_monoid(n, a, b)
            ok = monoid_improved_applies(n, a, b)
            improved = closed_monoid_improved(n, a, b) if ok else None
            cases.append(_case(
                f"monoid-improved:a={a},b={b},n={n}", {"a": a, "b": b, "n": n},
                "two-sum form", improved, ok and improved == basic,
            ))
    for n in range(2, max_n + 1):
        v = closed_no_mult_one(n)
        cases.append(_case(
            f"no-mult-one:n={n}", {"n": n}, "two-sum form with a=2, b=3", v,
            v == closed_monoid(n, 2, 3),
        ))
    F = field_of_order(brute_q)
    for a, b in pairs:
        w = WeightFn.monoid_ab(a, b)
        series = alpha_series(weight_series(w, (brute_max,)), q=brute_q)
        for n in range(brute_max + 1):
            brute = brute_alpha(F, (n,), w)
            closed = closed_monoid(n, a, b).evaluate(brute_q)
            vals = {closed, series[(n,)]}
            if monoid_improved_applies(n, a, b):
                vals.add(closed_monoid_improved(n, a, b).evaluate(brute_q))
            if (a, b) == (2, 3) and n >= 2:
                vals.add(closed_no_mult_one(n).evaluate(brute_q))
            cases.append(_case(
                f"monoid-brute:q={brute_q},a={a},b={b},n={n}",
                {"q": brute_q, "a": a, "b": b, "n": n},
                "closed forms = series = brute", brute, vals == {brute},
            ))
    for k in range(chain_k + 1):
        cases.append(_case(
            f"chain:k={k}", {"k": k}, "period-6 relations", residue_chain_check(k),
            residue_chain_check(k),
        ))
    return cases


def check_expected(qs=(2, 3), js=(1, 2), max_n=7):
    cases = []
    for q in qs:
        F = field_of_order(q)
        for w in (WeightFn.all_one(), WeightFn.min_lt_r(2)):
            for j in js:
                for n in range(1, max_n + 1):
                    got = expected_factor_count(w, (n,), j, q)
                    want = brute_expected_fj(F, (n,), j, w)
                    cases.append(_case(
                        f"expected:q={q},w={w.spec()},j={j},n={n}",
                        {"q": q, "weights": w.spec(), "j": j, "n": n},
                        "brute weighted mean", got, got == want,
                    ))
    return cases


def check_qt(max_sym=10, brute_q=2, brute_max=8):
    cases = []
    polys = {n: qt_polynomial(n) for n in range(max_sym + 1)}
    for n, P in polys.items():
        cases.append(_case(f"qt-symmetric:n={n}", {"n": n}, "swap q<->t", P, P.is_symmetric()))
        cases.append(_case(
            f"qt-t=1:n={n}", {"n": n}, "q^n", P.eval_t(1), P.eval_t(1) == UniPoly.monomial(n),
        ))
    for n, M in QT_REFERENCE_MATRICES.items():
        P = polys[n] if n in polys else qt_polynomial(n)
        cases.append(_case(f"qt-table:n={n}", {"n": n}, "published matrix", P, P == qt_from_matrix(M, n)))
    F = field_of_order(brute_q)
    for n in range(brute_max + 1):
        P = polys[n] if n in polys else qt_polynomial(n)
        got = P.eval_q(brute_q)
        cases.append(_case(
            f"qt-brute:q={brute_q},n={n}", {"q": brute_q, "n": n}, "brute sum of t^f(p)",
            got, got == brute_qt_polynomial(F, n),
        ))
    return cases


def _random_caps(rng, max_cap):
    d = rng.choice((1, 2))
    return tuple(rng.randint(1, max_cap) for _ in range(d))


def _random_rational(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def check_roundtrip(count=100, max_cap=8, seed=20240101):
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        caps = _random_caps(rng, max_cap)
        keys = [k for k in product(*(range(c + 1) for c in caps)) if any(k)]
        chosen = rng.sample(keys, min(len(keys), rng.randint(1, 6)))
        coeffs = {k: _random_rational(rng) for k in chosen}
        coeffs[(0,) * len(caps)] = 1
        g = MultiSeries(caps, coeffs)
        a = extract_exponents(g)
        back = reconstruct_from_exponents(a, caps)
        cases.append(_case(
            f"series-roundtrip:{i}", {"caps": list(caps), "g": str(g)},
            "reconstruct(extract(g)) = g", back == g, back == g,
        ))
        amap = {k: _random_rational(rng) for k in rng.sample(keys, min(len(keys), rng.randint(1, 6)))}
        amap = {k: v for k, v in amap.items() if v}
        again = extract_exponents(reconstruct_from_exponents(amap, caps))
        cases.append(_case(
            f"exponent-roundtrip:{i}", {"caps": list(caps), "a": {str(k): str(v) for k, v in amap.items()}},
            "extract(reconstruct(a)) = a", again == amap, again == amap,
        ))
    return cases


def closed_form_weights():
    """The weight classes with closed forms, with the box used for each."""
    out = []
    for d in (1, 2):
        caps = (10,) * d
        for r in (1, 2, 3):
            out.append((WeightFn.min_lt_r(r, d), caps))
        for m, r in ((2, 1), (3, 1), (3, 2)):
            out.append((WeightFn.residue_window(m, r, d), caps))
        out.append((WeightFn.all_one(d), caps))
    for a, b in MONOID_PAIRS:
        out.append((WeightFn.monoid_ab(a, b), (10,)))
    return out


def check_path_equivalence(weights=None, qs=(None, 2)):
    cases = []
    for w, caps in weights or closed_form_weights():
        g = weight_series(w, caps)
        for q in qs:
            via_log = alpha_series(g, q=q)
            via_product = alpha_series_by_product(g, q=q)
            cases.append(_case(
                f"paths:{w.spec()},caps={caps},q={'sym' if q is None else q}",
                {"weights": w.spec(), "caps": list(caps), "q": "sym" if q is None else q},
                "explicit product over integer exponents", via_log == via_product,
                via_log == via_product,
            ))
    return cases


QUICK = {
    "cyclotomic": [(check_cyclotomic, {})],
    "irreducible": [(check_irreducible_counts, {"qs": (2, 3, 4, 5), "max_n": 6})],
    "rfree": [
        (check_rfree_single, {"limits": ((2, 8), (3, 5))}),
        (check_rfree_tuples, {"max_total": 8}),
    ],
    "residue": [(check_residue, {"max_total": 8})],
    "monoid": [(check_monoid, {"max_n": 30, "brute_max": 10})],
    "expected": [(check_expected, {"max_n": 4})],
    "qt": [(check_qt, {"max_sym": 6, "brute_max": 5})],
    "roundtrip": [
        (check_roundtrip, {"count": 20, "max_cap": 5}),
        (check_path_equivalence, {"qs": (None,)}),
    ],
}

FULL = {
    "cyclotomic": [(check_cyclotomic, {})],
    "irreducible": [(check_irreducible_counts, {})],
    "rfree": [(check_rfree_single, {}), (check_rfree_tuples, {})],
    "residue": [(check_residue, {})],
    "monoid": [(check_monoid, {})],
    "expected": [(check_expected, {})],
    "qt": [(check_qt, {})],
    "roundtrip": [(check_roundtrip, {}), (check_path_equivalence, {})],
}

SUITE_NAMES = tuple(FULL) + ("all",)


def report(suite, cases):
    passed = sum(c["pass"] for c in cases)
    return {
        "suite": suite,
        "cases": cases,
        "pass_count": passed,
        "fail_count": len(cases) - passed,
    }


def run_suite(name, quick=False):
    """Run one suite (or ``all``) and return its report dict."""
    plan = QUICK if quick else FULL
    if name == "all":
        cases = []
        for sub in plan:
            for c in run_suite(sub, quick)["cases"]:
                cases.append({**c, "id": f"{sub}/{c['id']}"})
        return report("all", cases)
    if name not in plan:
        raise KeyError(name)
    cases = []
    for fn, kwargs in plan[name]:
        try:
            cases.extend(fn(**kwargs))
        except BudgetExceeded as exc:
            cases.append(_case(f"{fn.__name__}:budget", kwargs, "budget", exc, False))
    return report(name, cases)
