"""Command line front end.

Subcommands:

* solve    - run a difference map: closed form, brute-force iteration
             or both (CSV of exact rational strings by default; exit
             code 1 when the two columns differ anywhere).
* flow     - emit the monomial and basic coefficients of a delta flow.
* basis    - emit the coefficient matrix of a basic sequence.
* verify   - run the exact invariant suite; exit 0 iff all checks pass.
* numcheck - float validation of the exponential closed forms and the
             Lambert W grid; exit 0 iff every sample is within
             tolerance.

All output is deterministic: fixed orderings, no timestamps.
"""

import argparse
import json
import sys

from .deltaflow import delta_flow
from .numeric import (
    CLOSED_FORM_KINDS,
    NumericConfig,
    SeriesDivergence,
    lambert_w_residual,
    numeric_closed_form_check,
)
from .scalars import format_scalar, parse_scalar
from .series import XSeries
from .solver import (
    corpus_map,
    iterate_table,
    logistic_map,
    quadratic_map,
)
from .umbral import abel, backward, basic_sequence_from_delta, derivative, forward, touchard
from .verifysuite import all_pass, run_checks

__all__ = ["main", "cli_main"]


def _parse_map(spec, field):
    if ":" in spec:
        kind, _, arg = spec.partition(":")
        if kind == "logistic":
            return logistic_map(parse_scalar(arg, field))
        if kind == "quadratic":
            return quadratic_map(parse_scalar(arg, field))
        if kind == "poly":
            return XSeries([parse_scalar(c, field) for c in arg.split(",")])
        raise ValueError("unknown map kind %r" % kind)
    return corpus_map(spec)["g"]


def _operator(name, alpha, order):
    if name == "derivative":
        return derivative(order)
    if name == "forward":
        return forward(order)
    if name == "backward":
        return backward(order)
    if name == "abel":
        return abel(alpha, order)
    if name == "touchard":
        return touchard(order)
    raise ValueError("unknown operator %r" % name)


def _emit(text):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_solve(args):
    g = _parse_map(args.map, args.field)
    x0 = parse_scalar(args.x0, args.field)
    table = iterate_table(g, x0, args.steps)
    rows = []
    for n, closed, iterated, equal in table.rows:
        row = {"n": n}
        if args.mode in ("closed", "both"):
            row["closed"] = format_scalar(closed)
        if args.mode in ("iterate", "both"):
            row["iterated"] = format_scalar(iterated)
        if args.mode == "both":
            row["equal"] = equal
        rows.append(row)
    if args.format == "json":
        _emit(json.dumps({"map": args.map, "x0": args.x0, "rows": rows}))
    else:
        header = ["n"]
        if args.mode in ("closed", "both"):
            header.append("closed")
        if args.mode in ("iterate", "both"):
            header.append("iterated")
        if args.mode == "both":
            header.append("equal")
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(str(row[h]) for h in header))
        _emit("\n".join(lines))
    if args.mode == "both" and not table.all_equal:
        return 1
    return 0


def _cmd_flow(args):
    f = XSeries([parse_scalar(c, args.field) for c in args.f.split(",")])
    Q = _operator(args.op, parse_scalar(args.alpha, args.field), max(args.order, args.depth))
    df = delta_flow(f, Q, args.order)
    basic = [["0"]] + [
        [format_scalar(c) for c in xs.coeffs] or ["0"] for xs in df.coeffs
    ]
    mono_flow = df.flow.to_monomial()
    mono = [["0"]] + [
        [format_scalar(c) for c in xs.coeffs] or ["0"] for xs in mono_flow.coeffs
    ]
    payload = {
        "operator": args.op,
        "order": args.order,
        "basic": basic,
        "monomial": mono,
    }
    if args.format == "json":
        _emit(json.dumps(payload))
    else:
        lines = []
        for label, block in (("basic", basic), ("monomial", mono)):
            for n, coeffs in enumerate(block):
                lines.append(",".join([label, str(n)] + coeffs))
        _emit("\n".join(lines))
    return 0


def _cmd_basis(args):
    Q = _operator(args.op, parse_scalar(args.alpha, "Q"), max(args.depth, 1))
    basis = basic_sequence_from_delta(Q, args.depth)
    matrix = [
        [format_scalar(basis.beta(k, n)) for n in range(args.depth + 1)]
        for k in range(args.depth + 1)
    ]
    payload = {"basis": args.op, "order": args.depth, "coeffs": matrix}
    if args.format == "json":
        _emit(json.dumps(payload))
    else:
        _emit("\n".join(",".join(row) for row in matrix))
    return 0


def _cmd_verify(args):
    results = run_checks(order=args.order, depth=args.depth, ops=args.ops)
    ok = all_pass(results)
    if args.format == "json":
        _emit(json.dumps({"order": args.order, "depth": args.depth, "all_pass": ok, "checks": results}))
    else:
        lines = ["group,name,pass,residual"]
        for r in results:
            lines.append("%s,%s,%s,%s" % (r["group"], r["name"], r["pass"], r["residual"]))
        _emit("\n".join(lines))
    return 0 if ok else 1


def _cmd_numcheck(args):
    config = NumericConfig(tolerance=args.tolerance, depth=args.depth)
    rows = []
    ok = True
    for kind in CLOSED_FORM_KINDS:
        for a, t in config.samples:
            alpha = 1.0
            try:
                report = numeric_closed_form_check(kind, a, t, alpha=alpha, config=config)
                within = report.deviation < config.tolerance
                rows.append(
                    {
                        "kind": kind,
                        "a": a,
                        "t": t,
                        "deviation": "%.3e" % report.deviation,
                        "status": "ok" if within else "exceeds-tolerance",
                    }
                )
                ok = ok and within
            except SeriesDivergence as exc:
                rows.append(
                    {"kind": kind, "a": a, "t": t, "deviation": "", "status": "diverged: %s" % exc}
                )
                ok = False
    worst_w = max(lambert_w_residual(x) for x in config.lambert_grid)
    lambert_ok = worst_w < config.lambert_tolerance
    ok = ok and lambert_ok
    payload = {
        "tolerance": config.tolerance,
        "lambert_max_residual": "%.3e" % worst_w,
        "lambert_pass": lambert_ok,
        "cells": rows,
        "all_pass": ok,
    }
    if args.format == "json":
        _emit(json.dumps(payload))
    else:
        lines = ["kind,a,t,deviation,status"]
        for r in rows:
            lines.append("%s,%s,%s,%s,%s" % (r["kind"], r["a"], r["t"], r["deviation"], r["status"]))
        lines.append("lambert,max_residual=%s,pass=%s" % ("%.3e" % worst_w, lambert_ok))
        _emit("\n".join(lines))
    return 0 if ok else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="deltadyn",
        description="Exact flows for derivative and difference type dynamical systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="closed form vs. iteration of a difference map")
    p.add_argument("--map", required=True, help="corpus name, logistic:MU, quadratic:C or poly:c0,c1,...")
    p.add_argument("--x0", required=True, help="initial value (exact rational string)")
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--field", choices=("Q", "Qi"), default="Q")
    p.add_argument("--mode", choices=("closed", "iterate", "both"), default="both")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("flow", help="coefficients of a delta flow")
    p.add_argument("--f", required=True, help="generator coefficients c0,c1,...")
    p.add_argument("--op", choices=("derivative", "forward", "backward", "abel", "touchard"), default="forward")
    p.add_argument("--alpha", default="1")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--field", choices=("Q", "Qi"), default="Q")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_flow)

    p = sub.add_parser("basis", help="beta matrix of a basic sequence")
    p.add_argument("--op", choices=("derivative", "forward", "backward", "abel", "touchard"), required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_basis)

    p = sub.add_parser("verify", help="run the exact invariant suite")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--ops", default="all")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("numcheck", help="float checks of the closed forms")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_numcheck)

    return parser


def cli_main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


def main():
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
