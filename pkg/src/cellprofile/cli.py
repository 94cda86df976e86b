"""Command-line front end.

Exit codes: 0 ok, 1 usage or parse error, 2 capacity exceeded, 3 verification failure.
Big integers are written as decimal strings in JSON.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

from .cellcalc.bounds import check_bounds
from .cellcalc.classify import classify, normalizer, structural_report
from .cellcalc.parser import parse
from .cellcalc.profile import profile
from .cellcalc.tree import to_expr
from .errors import CapacityError, ConsistencyError, InputError, VerificationError
from .oracle.agreement import agreement_check
from .oracle.structures import load_structure
from .witness import JOBS_ENV, count_coded_graphs

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _tree(args):
    fin = load_structure(args.fin) if getattr(args, "fin", None) else None
    expr = args.expr
    if expr is None:
        if fin is None:
            raise InputError("--expr is required (or --fin to use a finite structure directly)")
        expr = "fin"
    return parse(expr, fin=fin)


def output_records(tree, order: int) -> list[dict]:
    values = profile(tree, order).values
    norm = normalizer(structural_report(tree))
    rows = []
    for n, f in enumerate(values):
        rows.append(
            {
                "n": n,
                "value": str(f),
                "log_value": math.log(f) if f > 0 else None,
                "normalizer": norm(n, f),
            }
        )
    return rows


def cmd_profile(args, out) -> int:
    tree = _tree(args)
    rows = output_records(tree, args.n)
    if args.format == "json":
        json.dump({"expr": to_expr(tree), "rows": rows}, out, indent=2)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "value", "log_value", "normalizer"])
        for r in rows:
            w.writerow(
                [r["n"], r["value"]]
                + ["" if r[key] is None else repr(r[key]) for key in ("log_value", "normalizer")]
            )
    return EXIT_OK


def cmd_classify(args, out) -> int:
    tree = _tree(args)
    report = classify(tree, args.n)
    json.dump({"expr": to_expr(tree), "n": args.n, **report.to_json()}, out, indent=2)
    out.write("\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    tree = _tree(args)
    width = args.width if args.width is not None else args.n
    report = agreement_check(tree, width, args.n)
    json.dump(report.to_json(), out, indent=2)
    out.write("\n")
    return EXIT_OK if report.agree else EXIT_VERIFY


def cmd_witness(args, out) -> int:
    json.dump(count_coded_graphs(args.n).to_json(), out, indent=2)
    out.write("\n")
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    tree = _tree(args)
    report = check_bounds(tree, args.n)
    json.dump({"expr": to_expr(tree), **report.to_json()}, out, indent=2)
    out.write("\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="cellprofile",
        description="Exact orbit-growth profiles of hereditarily cellular structures.",
        epilog=f"Set {JOBS_ENV}=<workers> to bound internal parallelism (0 = auto).",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def expr_args(sp):
        sp.add_argument("--expr", help="cell-tree expression, e.g. 'mset_inf(set)'")
        sp.add_argument("--fin", metavar="PATH", help="finite structure JSON, usable as bare 'fin'")

    sp = sub.add_parser("profile", help="exact profile f(0..n)")
    expr_args(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("classify", help="growth regime with fitted constants")
    expr_args(sp)
    sp.add_argument("--n", type=int, default=512)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("check", help="oracle agreement on a finite truncation")
    expr_args(sp)
    sp.add_argument("--n", type=int, required=True, help="largest subset size compared")
    sp.add_argument("--width", type=int, help="truncation width (default: --n)")
    sp.add_argument("--format", choices=("json",), default="json")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("witness", help="bipartite coding witness B(n)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("json",), default="json")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("bounds", help="finite-n growth inequalities on every subtree")
    expr_args(sp)
    sp.add_argument("--n", type=int, default=32)
    sp.add_argument("--format", choices=("json",), default="json")
    sp.set_defaults(func=cmd_bounds)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (VerificationError, ConsistencyError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
