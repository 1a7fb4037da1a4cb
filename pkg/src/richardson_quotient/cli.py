"""Command-line entry point: describe, verify, example-table, matrix, realize."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .deodhar import build_matrix
from .errors import DomainError, SearchLimitExceeded
from .quotient import DEFAULT_SEED, identify_quotient, realize_product
from .tableau import DEFAULT_DEGREE_CAP, DEFAULT_NODE_LIMIT, count_A_formula, enumerate_A
from .verify import CHECKS, RunConfig, run_verification
from .weyl import (GrassmannianContext, check_m, coset_length, v_max, v_of_m,
                   w_min)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

# the nine (10,3,3) cases, in the order of the worked example
EXAMPLE_ITEMS = ((3, 3), (2, 3), (3, 2), (1, 3), (2, 2), (3, 1), (1, 2), (2, 1), (1, 1))


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fmt(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _context(args) -> tuple[GrassmannianContext, tuple[int, ...]]:
    try:
        ctx = GrassmannianContext.from_any(n=args.n, r=args.r, q=args.q)
    except (DomainError, TypeError) as exc:
        raise UsageError(f"bad (n, r, q): {exc}")
    if args.m is None:
        raise UsageError("--m is required")
    try:
        m = check_m(args.m, ctx)
    except DomainError as exc:
        raise UsageError(str(exc))
    return ctx, m


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_describe(args) -> int:
    ctx, m = _context(args)
    w, v, vm = w_min(ctx), v_max(ctx), v_of_m(m, ctx)
    count = len(enumerate_A(m, ctx, 1, limit=args.limit))
    qi = identify_quotient(m, ctx)
    payload = {
        "schema": 1, "command": "describe",
        "n": ctx.n, "r": ctx.r, "q": ctx.q, "m": list(m),
        "w": list(w), "v": list(v), "v_m": list(vm),
        "lengths": {"w": coset_length(w), "v": coset_length(v), "v_m": coset_length(vm)},
        "A": count, "quotient": qi.to_json(), "summary": qi.describe(),
    }
    text = "\n".join([
        f"context {ctx} m={_fmt(m)}",
        f"w   = {_fmt(w)}  length {coset_length(w)}",
        f"v   = {_fmt(v)}  length {coset_length(v)}",
        f"v_m = {_fmt(vm)}  length {coset_length(vm)}",
        f"|A| = {count}",
        f"quotient: {qi.describe()}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    ctx, m = _context(args)
    try:
        cfg = RunConfig(ctx, m, kmax=args.kmax, trials=args.trials, seed=args.seed,
                        limit=args.limit, faults=frozenset(args.inject_fault or ()),
                        timings=args.timings)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = run_verification(cfg)
    _emit(args, report.to_json(), report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_example_table(args) -> int:
    ctx = GrassmannianContext(10, 3, 3)
    rows, lines, ok = [], [], True
    for item, m in enumerate(EXAMPLE_ITEMS, start=1):
        qi = identify_quotient(m, ctx)
        enumerated = len(enumerate_A(m, ctx, 1, limit=args.limit))
        formula = count_A_formula(m, ctx, 1)
        agree = enumerated == formula == qi.section_count
        ok &= agree
        rows.append({"item": item, "m": list(m), **qi.to_json(),
                     "enumerated": enumerated, "formula": formula, "agree": agree})
        mark = "" if agree else f"  [count mismatch: enumerated {enumerated}, formula {formula}]"
        lines.append(f"({item}) m={_fmt(m)}: {qi.describe()}{mark}")
    _emit(args, {"schema": 1, "command": "example-table", "n": 10, "r": 3, "q": 3,
                 "rows": rows}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_matrix(args) -> int:
    ctx, m = _context(args)
    M = build_matrix(m, ctx)
    if args.format == "json":
        print(json.dumps(M.to_json(), indent=2))
    else:
        sys.stdout.write(M.to_text())
    return EXIT_OK


def cmd_realize(args) -> int:
    try:
        ctx, m = realize_product(args.targets, args.q)
    except DomainError as exc:
        raise UsageError(str(exc))
    qi = identify_quotient(m, ctx)
    dims = tuple(d for d, _ in qi.factors)
    degrees = tuple(e for _, e in qi.factors)
    confirmed = dims == tuple(args.targets) and degrees == tuple(range(len(dims), 0, -1))
    payload = {"schema": 1, "command": "realize", "targets": list(args.targets),
               "n": ctx.n, "r": ctx.r, "q": ctx.q, "m": list(m),
               "quotient": qi.to_json(), "confirmed": confirmed}
    text = "\n".join([
        f"targets {_fmt(args.targets)} -> {ctx} m={_fmt(m)}",
        f"quotient: {qi.describe()}",
        f"confirmed: {'yes' if confirmed else 'no'}",
    ])
    _emit(args, payload, text)
    return EXIT_OK if confirmed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--limit", type=int, default=DEFAULT_NODE_LIMIT,
                        help="search-node limit for tableau enumeration")

    ctxp = argparse.ArgumentParser(add_help=False)
    ctxp.add_argument("--n", type=int)
    ctxp.add_argument("--r", type=int)
    ctxp.add_argument("--q", type=int)
    ctxp.add_argument("--m", type=_int_list, help="comma-separated, r-1 entries in [1, q]")

    parser = argparse.ArgumentParser(
        prog="richardson-quotient",
        description="Exact checks for torus quotients of Richardson varieties in G(r, qr+1).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", parents=[common, ctxp], help="indices, |A| and quotient type")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("verify", parents=[common, ctxp], help="run the full check suite")
    p.add_argument("--kmax", type=int, default=DEFAULT_DEGREE_CAP)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--inject-fault", action="append", choices=CHECKS, metavar="CHECK",
                   help=f"corrupt one check's data; one of {', '.join(CHECKS)}")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example-table", parents=[common], help="the nine (10,3,3) cases")
    p.set_defaults(func=cmd_example_table)

    p = sub.add_parser("matrix", parents=[common, ctxp], help="render the parametrizing matrix")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("realize", parents=[common], help="find (n, r, q, m) for a product of P^a")
    p.add_argument("targets", type=_int_list, help="comma-separated dimensions a_1,...,a_l")
    p.add_argument("--q", type=int, help="use this q instead of the smallest, max(a)+1")
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kmax", 1) < 1 or getattr(args, "trials", 1) < 1 or args.limit < 1:
        parser.error("--kmax, --trials and --limit must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchLimitExceeded as exc:
        print(f"{parser.prog}: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
