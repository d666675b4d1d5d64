"""Command-line entry point.

Exit codes: 0 success, 1 bad input (including usage errors), 2 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError, InvariantViolation
from .harness import emit_report, evaluate, load_corpus
from .parser import VariableContext, parse_poly, print_poly
from .puiseux import OracleStatus, oracle_verdict
from .tangency import criterion_sweep, tangency_remainder_xr
from .weierstrass import euclidean_divide, to_weierstrass, weierstrass_prepare

GENZMER_CUBIC = "x^3 + x*y^2 + y^3"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt_per_r(per_r) -> str:
    return "{" + ", ".join(f"{r}:{o}" for r, o in sorted(per_r.items())) + "}"


def _bool(v) -> str:
    return "true" if v else "false"


def _context(args) -> VariableContext:
    try:
        return VariableContext.from_string(args.vars)
    except ValueError as exc:
        raise InputError(f"--vars: {exc}") from exc


def cmd_divide(args, out):
    ctx = _context(args)
    f = to_weierstrass(parse_poly(args.f, ctx))
    res = euclidean_divide(parse_poly(args.g, ctx), f)
    print(f"Q = {print_poly(res.quotient, ctx)}", file=out)
    print(f"R = {print_poly(res.remainder, ctx)}", file=out)
    return 0


def cmd_prepare(args, out):
    ctx = _context(args)
    res = weierstrass_prepare(parse_poly(args.g, ctx), args.precision)
    print(f"u = {print_poly(res.unit.poly, ctx)} + O(deg {res.precision + 1})", file=out)
    print(f"P = {print_poly(res.wpoly.poly, ctx)}", file=out)
    print(f"k = {res.wpoly.k}", file=out)
    return 0


def cmd_tangency(args, out):
    ctx = _context(args)
    f = to_weierstrass(parse_poly(args.f, ctx))
    rep = tangency_remainder_xr(f, args.r)
    print(f"remainder = {print_poly(rep.remainder, ctx)}", file=out)
    print(f"order = {rep.order}", file=out)
    return 0


def cmd_criterion(args, out):
    ctx = _context(args)
    v = criterion_sweep(to_weierstrass(parse_poly(args.f, ctx)))
    print(f"k = {v.k}", file=out)
    print(f"per_r={_fmt_per_r(v.per_r)}", file=out)
    print(f"claims_reducible={_bool(v.claims_reducible)}", file=out)
    print(f"witness_r={v.witness_r if v.witness_r is not None else 'none'}", file=out)
    return 0


def cmd_oracle(args, out):
    ctx = _context(args)
    v = oracle_verdict(to_weierstrass(parse_poly(args.f, ctx)))
    print(f"branches={v.branches if v.branches is not None else 'UNKNOWN'}", file=out)
    print(f"status={v.status}", file=out)
    if v.reducible is not None:
        print(f"reducible={_bool(v.reducible)}", file=out)
    for note in v.notes:
        print(f"  {note}", file=out)
    return 0


def cmd_evaluate(args, out):
    rows = evaluate(load_corpus(args.corpus), jobs=args.jobs)
    text = emit_report(rows, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        out.write(text)
    return 0


def cmd_falsify(args, out):
    ctx = VariableContext(["x", "y"])
    f = to_weierstrass(parse_poly(GENZMER_CUBIC, ctx))
    rep = tangency_remainder_xr(f, 2)
    verdict = criterion_sweep(f)
    oracle = oracle_verdict(f)
    print(f"f = {print_poly(f.poly, ctx)}", file=out)
    print(f"remainder(x^2 d/dx) = {print_poly(rep.remainder, ctx)}", file=out)
    print(f"per_r={_fmt_per_r(verdict.per_r)}", file=out)
    print(f"criterion: {'reducible' if verdict.claims_reducible else 'irreducible'}", file=out)
    print(f"oracle: branches={oracle.branches} status={oracle.status}", file=out)
    falsified = (not verdict.claims_reducible and oracle.status is OracleStatus.EXACT
                 and oracle.branches == 3)
    if falsified:
        print("THEOREM FALSIFIED: criterion reports irreducible, the germ has 3 branches", file=out)
        return 0
    print("expected disagreement NOT reproduced", file=out)
    return 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vfcrit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_vars(sp):
        sp.add_argument("--vars", default="x,y",
                        help="comma-separated variable names; the first is x (default: x,y)")
        return sp

    sp = with_vars(sub.add_parser("divide", help="Weierstrass division of g by f"))
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.set_defaults(func=cmd_divide)

    sp = with_vars(sub.add_parser("prepare", help="Weierstrass preparation of g"))
    sp.add_argument("--g", required=True)
    sp.add_argument("--precision", type=int, default=12)
    sp.set_defaults(func=cmd_prepare)

    sp = with_vars(sub.add_parser("tangency", help="tangency of x^r d/dx with f"))
    sp.add_argument("--f", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(func=cmd_tangency)

    sp = with_vars(sub.add_parser("criterion", help="sweep x^r d/dx for 2 <= r < k"))
    sp.add_argument("--f", required=True)
    sp.set_defaults(func=cmd_criterion)

    sp = with_vars(sub.add_parser("oracle", help="Newton-Puiseux branch count"))
    sp.add_argument("--f", required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("evaluate", help="criterion vs oracle over a corpus")
    sp.add_argument("--corpus", default=None, help="corpus JSON (default: bundled corpus)")
    sp.add_argument("--format", choices=("csv", "md"), default="csv")
    sp.add_argument("--out", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_evaluate)

    sp = sub.add_parser("falsify", help="run the homogeneous-cubic counterexample")
    sp.set_defaults(func=cmd_falsify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (InputError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
