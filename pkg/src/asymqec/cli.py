"""Command-line front end.

    asymqec cosets --n 15 --q 2
    asymqec code bch:n=15,q=2,delta=5
    asymqec derive css --c1 bch:n=15,q=2,delta=3 --c2 bch:n=15,q=2,delta=5
    asymqec derive extend-set --c1 "q=2 n=15 T={1,2,4,8}" --T {3,6,9,12}
    asymqec table1 --rows 1,2
    asymqec search --n 15 --q 2 --route css

Output format is text (default), json or csv via --format. Exit codes:
0 success, 2 precondition or parse error, 3 budget exceeded without a
fallback, 4 internal consistency failure. The modulus override table is
read from the file named by ASYMQEC_MODULUS_TABLE.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .aqec import (
    AqecParams,
    SubsystemParams,
    correction_capability,
    css_aqec,
    extend_by_defining_set,
    extend_by_polynomial,
    subsystem_euclidean,
)
from .audit import REFERENCE_TABLE, audit_rows
from .cyclic import CyclicCode, parse_code, parse_residue_set
from .errors import BudgetExceeded, InternalConsistencyError
from .polyring import coset_of, cyclotomic_cosets, minimal_polynomial, parse_poly, render_poly
from .search import DEFAULT_MAX_CODES, ROUTES, search
from .weights import DEFAULT_BUDGET, min_weight

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_INCONSISTENT = 4


def _emit_json(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _emit_csv(rows: list[dict], fieldnames: list[str]) -> None:
    writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames, extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def _params_flat(p: AqecParams | SubsystemParams) -> dict:
    return {
        "n": p.n,
        "q": p.q,
        "k": p.k,
        "r": getattr(p, "r", ""),
        "dz": p.dz.value,
        "dz_method": p.dz.method,
        "dx": p.dx.value,
        "dx_method": p.dx.method,
        "pure": "" if p.pure is None else p.pure,
        "c1": p.c1.descriptor(),
        "c2": p.c2.descriptor(),
        "route": p.route,
    }


_PARAMS_FIELDS = ["n", "q", "k", "r", "dz", "dz_method", "dx", "dx_method",
                  "pure", "c1", "c2", "route"]


def _print_params(p: AqecParams | SubsystemParams) -> None:
    print(p.label())
    print(f"  c1: {p.c1.descriptor()}   [{p.c1.n},{p.c1.k}]_{p.c1.q}")
    print(f"  c2: {p.c2.descriptor()}   [{p.c2.n},{p.c2.k}]_{p.c2.q}")
    print(f"  dz: {p.dz.render()} ({p.dz.method})   dx: {p.dx.render()} ({p.dx.method})")
    if p.pure is not None:
        print(f"  pure: {p.pure}")
    cap = correction_capability(p)
    marker = "" if cap.exact else " (lower bounds)"
    print(f"  corrects: {cap.t_x} flip / {cap.t_z} phase errors{marker}")
    print(f"  route: {p.route}")
    for note in p.notes:
        print(f"  note: {note}")


def _exact_violated(args, results) -> bool:
    """--exact forbids bound-only output; True if any distance degraded."""
    if not getattr(args, "exact", False):
        return False
    for p in results:
        if not (p.dz.is_exact and p.dx.is_exact):
            print(
                f"error: distances are only bounds at budget {args.budget} "
                f"and --exact forbids the bound-only fallback",
                file=sys.stderr,
            )
            return True
    return False


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------

def _cmd_cosets(args) -> int:
    cosets = cyclotomic_cosets(args.n, args.q)
    if args.format == "json":
        _emit_json({"n": args.n, "q": args.q,
                    "cosets": [list(c.members) for c in cosets]})
    elif args.format == "csv":
        rows = [
            {"representative": c.representative, "size": len(c.members),
             "members": ",".join(map(str, c.members))}
            for c in cosets
        ]
        _emit_csv(rows, ["representative", "size", "members"])
    else:
        for c in cosets:
            print(c)
    return EXIT_OK


def _code_report(code: CyclicCode, args) -> dict:
    report = {
        "descriptor": code.descriptor(),
        "n": code.n,
        "q": code.q,
        "k": code.k,
        "T": list(code.T.sorted_members),
        "generator": render_poly(code.generator_polynomial),
        "designed_bound": code.designed_distance_bound,
        "d": None,
    }
    if code.k > 0:
        try:
            report["d"] = min_weight(code, args.budget, workers=args.workers).as_dict()
        except BudgetExceeded:
            if args.exact:
                raise
            report["d"] = {"value": code.designed_distance_bound, "method": "bound-only"}
    return report


def _cmd_code(args) -> int:
    code = parse_code(" ".join(args.descriptor))
    report = _code_report(code, args)
    if args.format == "json":
        _emit_json(report)
    elif args.format == "csv":
        flat = dict(report)
        flat["T"] = ",".join(map(str, report["T"]))
        d = report["d"] or {}
        flat["d"] = d.get("value", "")
        flat["d_method"] = d.get("method", "")
        _emit_csv([flat], ["descriptor", "n", "q", "k", "T", "generator",
                           "designed_bound", "d", "d_method"])
    else:
        print(f"[{report['n']},{report['k']}]_{report['q']}  {report['descriptor']}")
        print(f"  g(x) = {report['generator']}")
        print(f"  designed distance bound: {report['designed_bound']}")
        if report["d"] is None:
            print("  d: (zero code)")
        else:
            mark = "" if report["d"]["method"] != "bound-only" else ">="
            print(f"  d: {mark}{report['d']['value']} ({report['d']['method']})")
    return EXIT_OK


def _parse_f(text: str, c1: CyclicCode):
    body = text.strip()
    if body.startswith("minpoly:"):
        i = int(body.split(":", 1)[1])
        return minimal_polynomial(c1.n, c1.q, coset_of(c1.n, c1.q, i))
    return parse_poly(body, c1.field)


def _cmd_derive(args) -> int:
    c1 = parse_code(args.c1)
    results: list[AqecParams | SubsystemParams]
    if args.route == "css":
        if not args.c2:
            raise ValueError("derive css requires --c2")
        params = css_aqec(c1, parse_code(args.c2), args.budget,
                          purity=args.purity, workers=args.workers)
        results = [params]
    elif args.route == "extend-poly":
        if not args.f:
            raise ValueError("derive extend-poly requires --f")
        _, params = extend_by_polynomial(c1, _parse_f(args.f, c1), args.budget,
                                         purity=args.purity, workers=args.workers)
        results = [params]
    elif args.route == "extend-set":
        if args.T is None:
            raise ValueError("derive extend-set requires --T")
        _, params = extend_by_defining_set(c1, parse_residue_set(args.T), args.budget,
                                           purity=args.purity, workers=args.workers)
        results = [params]
    else:  # subsystem
        first, swapped = subsystem_euclidean(c1, args.budget,
                                             purity=args.purity, workers=args.workers)
        results = [first, swapped]
    if _exact_violated(args, results):
        return EXIT_BUDGET
    if args.format == "json":
        payload = [p.as_dict() for p in results]
        _emit_json(payload[0] if len(payload) == 1 else payload)
    elif args.format == "csv":
        _emit_csv([_params_flat(p) for p in results], _PARAMS_FIELDS)
    else:
        for p in results:
            _print_params(p)
    return EXIT_OK


def _cmd_table1(args) -> int:
    indices = None
    if args.rows:
        indices = [int(tok) for tok in args.rows.split(",") if tok.strip()]
    audits = audit_rows(indices, args.budget, workers=args.workers)
    if args.format == "json":
        _emit_json([a.as_dict() for a in audits])
    elif args.format == "csv":
        rows = [
            {"row": a.index, "verdict": a.verdict, "expected": a.expected,
             "computed": a.computed.label() if a.computed else "",
             "c1_printed": a.c1_printed, "c2_printed": a.c2_printed,
             "c1": a.c1, "c2": a.c2, "notes": "; ".join(a.notes)}
            for a in audits
        ]
        _emit_csv(rows, ["row", "verdict", "expected", "computed",
                         "c1_printed", "c2_printed", "c1", "c2", "notes"])
    else:
        for a in audits:
            computed = a.computed.label() if a.computed else "(none)"
            print(f"row {a.index}: {a.verdict}")
            print(f"  inputs:   C1 = {a.c1_printed} ({a.c1}), C2 = {a.c2_printed} ({a.c2})")
            print(f"  printed:  {a.expected}")
            print(f"  computed: {computed}")
            for note in a.notes:
                print(f"  note: {note}")
    return EXIT_OK


def _cmd_search(args) -> int:
    results = search(args.n, args.q, args.route, args.budget,
                     max_results=args.max_results, workers=args.workers,
                     max_codes=args.max_space)
    if args.format == "json":
        _emit_json([p.as_dict() for p in results])
    elif args.format == "csv":
        _emit_csv([_params_flat(p) for p in results], _PARAMS_FIELDS)
    else:
        for p in results:
            print(f"{p.label()}  c1: {p.c1.descriptor()}  c2: {p.c2.descriptor()}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_common(sub, budget=True, workers=True, fmt=True, exact=False):
    if budget:
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="max codeword enumerations (default 2^28)")
    if workers:
        sub.add_argument("--workers", type=int, default=1,
                         help="parallel workers for weight searches")
    if fmt:
        sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    if exact:
        sub.add_argument("--exact", action="store_true",
                         help="fail (exit 3) instead of degrading to bound-only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asymqec",
        description="Build cyclic codes, derive asymmetric quantum and subsystem "
                    "codes, and audit the bundled reference table.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("cosets", help="cyclotomic coset partition of Z_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _add_common(p, budget=False, workers=False)
    p.set_defaults(handler=_cmd_cosets)

    p = subs.add_parser("code", help="report a classical cyclic code")
    p.add_argument("descriptor", nargs="+",
                   help="code descriptor, e.g. bch:n=15,q=2,delta=5 or q=2 n=15 T={1,2,4,8}")
    _add_common(p, exact=True)
    p.set_defaults(handler=_cmd_code)

    p = subs.add_parser("derive", help="derive an asymmetric quantum or subsystem code")
    p.add_argument("route", choices=ROUTES)
    p.add_argument("--c1", required=True, help="code descriptor for C1")
    p.add_argument("--c2", help="code descriptor for C2 (css route)")
    p.add_argument("--T", help="coset block for extend-set, e.g. {3,6,9,12}")
    p.add_argument("--f", help="polynomial for extend-poly: 'x^4+x+1' or minpoly:3")
    p.add_argument("--purity", action=argparse.BooleanOptionalAction, default=None,
                   help="force purity evaluation on/off (default: on for n <= 31)")
    _add_common(p, exact=True)
    p.set_defaults(handler=_cmd_derive)

    p = subs.add_parser("table1", help="audit the bundled reference table")
    p.add_argument("--rows", help=f"comma list of rows 1..{len(REFERENCE_TABLE)}")
    _add_common(p)
    p.set_defaults(handler=_cmd_table1)

    p = subs.add_parser("search", help="derive every admissible code at a length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--route", choices=ROUTES, default="css")
    p.add_argument("--max-results", type=int, default=None)
    p.add_argument("--max-space", type=int, default=DEFAULT_MAX_CODES,
                   help="cap on the number of defining sets to enumerate")
    _add_common(p)
    p.set_defaults(handler=_cmd_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalConsistencyError as exc:
        print(f"error: internal consistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
