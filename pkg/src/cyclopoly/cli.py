"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 computation paths disagree (or a
verification case failed), 3 brute-force budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from itertools import product

from .counting import alpha_of, closed_forms
from .errors import BudgetExceeded, DomainError, ShapeError
from .exactalg import UniPoly
from .ffpoly import BUDGET_ENV, brute_alpha, factorize, field_of_order, parse_field, parse_poly
from .numbertheory import DegreeVec, prime_power
from .series import alpha_series
from .verify import SUITE_NAMES, run_suite
from .weights import WeightFn, weight_series

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def parse_nvec(text):
    try:
        return DegreeVec(tuple(int(p) for p in text.split(",")))
    except (ValueError, DomainError) as exc:
        raise InputError(f"bad degree vector {text!r}: {exc}") from None


def parse_q(text):
    if text.strip().lower() == "sym":
        return None
    try:
        q = int(text)
    except ValueError:
        raise InputError(f"--q must be 'sym' or an integer, got {text!r}") from None
    if q < 2:
        raise InputError(f"--q must be >= 2, got {q}")
    return q


def parse_range(text):
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise InputError(f"bad range {text!r}; use LO..HI or N")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def parse_weights(text):
    try:
        return WeightFn.parse(text)
    except (DomainError, ShapeError, ValueError, OSError) as exc:
        raise InputError(f"bad weight spec {text!r}: {exc}") from None


def _fmt(v):
    return str(v)


def cmd_count(args, out):
    w = parse_weights(args.weights)
    nvec = parse_nvec(args.n)
    q = parse_q(args.q)
    if nvec.d != w.d:
        raise InputError(f"weights are {w.d}-dimensional but --n has {nvec.d} entries")
    res = alpha_of(w, nvec, q=q, brute=q is not None and not args.no_brute, strict=False)
    value = res.symbolic if q is None else res.numeric
    paths = res.paths
    bad = res.disagreements()
    payload = {
        "weights": w.spec(),
        "n": list(nvec),
        "q": "sym" if q is None else q,
        "value": _fmt(value),
        "paths": {tag: _fmt(v) for tag, v in paths.items()},
        "agree": not bad,
    }
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(["path", "value"])
        wr.writerow(["alpha", payload["value"]])
        for tag, v in payload["paths"].items():
            wr.writerow([tag, v])
    else:
        out.write(payload["value"] + "\n")
        for tag, v in payload["paths"].items():
            mark = "  MISMATCH" if tag in bad else ""
            out.write(f"  {tag}: {v}{mark}\n")
    if bad:
        print(f"error: computation paths disagree: {sorted(bad)}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_verify(args, out):
    if args.suite not in SUITE_NAMES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}")
    rep = run_suite(args.suite, quick=args.quick)
    if args.format == "text":
        for c in rep["cases"]:
            out.write(f"{'PASS' if c['pass'] else 'FAIL'} {c['id']}: {c['got']}\n")
        out.write(f"{rep['suite']}: {rep['pass_count']} passed, {rep['fail_count']} failed\n")
    else:
        out.write(json.dumps(rep, indent=2) + "\n")
    return EXIT_OK if rep["fail_count"] == 0 else EXIT_DISAGREE


def _table_rows(w, lo, hi, qs, brute):
    """Rows keyed by column name; raises BudgetExceeded from brute columns."""
    rows = []
    if hi < lo:
        return rows
    caps = (hi,) * w.d
    g = weight_series(w, caps)
    sym = alpha_series(g)
    numeric = {q: alpha_series(g, q=q) for q in qs}
    fields = {}
    if brute:
        for q in qs:
            if not prime_power(q):
                raise InputError(f"brute force needs a prime power q, got {q}")
            fields[q] = field_of_order(q)
    for nvec in product(range(lo, hi + 1), repeat=w.d):
        s = sym[nvec]
        s = s if isinstance(s, UniPoly) else UniPoly({0: s})
        closed = closed_forms(w, nvec)
        row = {"n": ",".join(map(str, nvec)), "alpha": s}
        row["closed"] = next(iter(closed.values()), "")
        row["_agree"] = all(v == s for v in closed.values())
        for q in qs:
            row[f"q={q}"] = numeric[q][nvec]
        for q in fields:
            b = brute_alpha(fields[q], nvec, w)
            row[f"brute q={q}"] = b
            row["_agree"] = row["_agree"] and b == numeric[q][nvec]
        rows.append(row)
    return rows


def cmd_table(args, out):
    w = parse_weights(args.weights)
    lo, hi = parse_range(args.n)
    qs = []
    if args.q:
        qs = [parse_q(t) for t in args.q.split(",")]
        if None in qs:
            raise InputError("--q for tables is a list of integers")
    columns = ["n", "alpha", "closed"] + [f"q={q}" for q in qs]
    if args.brute:
        columns += [f"brute q={q}" for q in qs]
    rows = _table_rows(w, lo, hi, qs, args.brute)
    cells = [[_fmt(r[c]) for c in columns] for r in rows]
    buf = io.StringIO()
    if args.format == "json":
        doc = {"weights": w.spec(), "columns": columns,
               "rows": [dict(zip(columns, c)) for c in cells]}
        buf.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(columns)
        wr.writerows(cells)
    else:
        widths = [max([len(h)] + [len(c[i]) for c in cells]) for i, h in enumerate(columns)]
        for line in [columns] + cells:
            buf.write("  ".join(v.ljust(wd) for v, wd in zip(line, widths)).rstrip() + "\n")
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    bad = [r["n"] for r in rows if not r["_agree"]]
    if bad:
        print(f"error: computation paths disagree at n = {bad}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_factor(args, out):
    try:
        F = parse_field(args.field)
        p = parse_poly(args.poly, F)
        fac = factorize(p.monic())
    except DomainError as exc:
        raise InputError(str(exc)) from None
    lead = p.coeffs[-1] if p.coeffs else 0
    prefix = f"{lead}*" if lead not in (0, 1) else ""
    out.write(f"{prefix}{fac}\n")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cyclopoly",
        description="Weighted counts of tuples of monic polynomials over finite fields.",
    )
    ap.add_argument("--budget", type=int, help=f"brute-force enumeration budget (env {BUDGET_ENV})")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count tuples of a given degree vector")
    c.add_argument("--weights", required=True, help="e.g. rfree:r=2,d=1 or monoid:a=2,b=3")
    c.add_argument("--n", required=True, help="degree vector, e.g. 5 or 3,2")
    c.add_argument("--q", default="sym", help="'sym' or a field size (default sym)")
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")
    c.add_argument("--no-brute", action="store_true", help="skip exhaustive enumeration")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("suite", help=", ".join(SUITE_NAMES))
    v.add_argument("--quick", action="store_true", help="reduced ranges")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="tabulate counts over a degree range")
    t.add_argument("--weights", required=True)
    t.add_argument("--n", required=True, help="LO..HI, applied to every coordinate")
    t.add_argument("--q", default="", help="comma-separated field sizes for numeric columns")
    t.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    t.add_argument("--brute", action="store_true", help="add brute-force columns")
    t.add_argument("-o", "--output", help="write to a file instead of stdout")
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("factor", help="factor a polynomial over a small finite field")
    f.add_argument("--field", required=True, help="e.g. 2, 3, 4=2^2")
    f.add_argument("poly", help='e.g. "x^6+x^4+x^3+x"')
    f.set_defaults(func=cmd_factor)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.budget is not None and args.budget < 1:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_INPUT
    saved = os.environ.get(BUDGET_ENV)
    if args.budget is not None:
        os.environ[BUDGET_ENV] = str(args.budget)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if saved is None:
            os.environ.pop(BUDGET_ENV, None)
        else:
            os.environ[BUDGET_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
