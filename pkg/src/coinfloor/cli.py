"""Command-line front end exposing every library operation.

Output is plain text by default; ``--format json`` emits a single object
{"command", "inputs", "result"} per invocation and ``--format csv`` emits a
header row plus data rows.  Exit codes: 0 success, 1 domain or usage error
(diagnostics on stderr), 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .coinproblem import (
    best_family_point,
    count_representable_upto,
    frobenius_number,
    nonrepresentable_set,
    representation_count,
    sylvester_sum,
    sylvester_sum_power,
    weighted_sylvester_sum,
)
from .core import CoprimePair
from .floorsum import FloorSumQuery, floor_sum_fast, floor_sum_naive
from .jacobi import jacobi_by_definition, jacobi_eisenstein
from .verify import TABLE1_PAIR, TABLE1_ROWS, GridSpec, reproduce_table1, run_suites

__all__ = ["main"]


class _UsageError(Exception):
    def __init__(self, parser: argparse.ArgumentParser, message: str) -> None:
        super().__init__(message)
        self.parser = parser
        self.message = message


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad arguments; route everything through
    # _UsageError so main() can return 1 and keep 2 for verification failures.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(self, message)


def _emit(args: argparse.Namespace, command: str, inputs: dict, result, columns: list[str] | None = None) -> None:
    """Print a result in the selected format.

    ``result`` is a scalar (int or str) or a list of row dicts; ``columns``
    fixes the column order for row output.
    """
    if args.format == "json":
        print(json.dumps({"command": command, "inputs": inputs, "result": result}))
        return
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        if isinstance(result, list):
            writer.writerow(columns)
            for row in result:
                writer.writerow([row[c] for c in columns])
        else:
            writer.writerow(["value"])
            writer.writerow([result])
        return
    if isinstance(result, list):
        for row in result:
            print(" ".join(str(row[c]) for c in columns))
    else:
        print(result)


def _cmd_floorsum(args: argparse.Namespace) -> int:
    query = FloorSumQuery(a=args.a, b=args.b, d=args.d)
    fs = floor_sum_naive(query) if args.naive else floor_sum_fast(query)
    inputs = {"a": args.a, "b": args.b, "d": args.d, "naive": bool(args.naive)}
    _emit(args, "floorsum", inputs, fs.value)
    return 0


def _cmd_frobenius(args: argparse.Namespace) -> int:
    value = frobenius_number(CoprimePair(args.a, args.b))
    _emit(args, "frobenius", {"a": args.a, "b": args.b}, value)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    value = representation_count(CoprimePair(args.a, args.b), args.n).count
    _emit(args, "count", {"a": args.a, "b": args.b, "n": args.n}, value)
    return 0


def _cmd_upto(args: argparse.Namespace) -> int:
    value = count_representable_upto(CoprimePair(args.a, args.b), args.k)
    _emit(args, "upto", {"a": args.a, "b": args.b, "k": args.k}, value)
    return 0


def _family_row(pair: CoprimePair, alpha: int) -> dict:
    point = best_family_point(pair, alpha)
    return {"alpha": point.alpha, "beta": point.beta, "k": point.k, "n0": point.n0}


def _cmd_best(args: argparse.Namespace) -> int:
    pair = CoprimePair(args.a, args.b)
    columns = ["alpha", "beta", "k", "n0"]
    inputs = {"a": args.a, "b": args.b}
    if args.all:
        start = 2 - args.a % 2  # smallest alpha > 0 with the parity of a
        rows = [_family_row(pair, alpha) for alpha in range(start, args.a, 2)]
        _emit(args, "best", dict(inputs, all=True), rows, columns)
    else:
        _emit(args, "best", dict(inputs, alpha=args.alpha),
              [_family_row(pair, args.alpha)], columns)
    return 0


def _cmd_gaps(args: argparse.Namespace) -> int:
    pair = CoprimePair(args.a, args.b)
    inputs: dict = {"a": args.a, "b": args.b}
    if args.sum:
        _emit(args, "gaps", dict(inputs, sum=True), sylvester_sum(pair))
    elif args.power is not None:
        _emit(args, "gaps", dict(inputs, power=args.power),
              sylvester_sum_power(pair, args.power))
    elif args.weighted is not None:
        lam_text, m_text = args.weighted
        try:
            lam = Fraction(lam_text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"argument --weighted: invalid rational value: {lam_text!r}")
        try:
            m = int(m_text)
        except ValueError:
            raise ValueError(f"argument --weighted: invalid int value: {m_text!r}")
        value = weighted_sylvester_sum(pair, lam, m)
        _emit(args, "gaps", dict(inputs, weighted=str(lam), power=m), str(value))
    else:
        gaps = nonrepresentable_set(pair).gaps
        if args.format == "plain":
            print(" ".join(map(str, gaps)))
        else:
            _emit(args, "gaps", inputs, [{"gap": n} for n in gaps], ["gap"])
    return 0


def _cmd_jacobi(args: argparse.Namespace) -> int:
    fn = jacobi_eisenstein if args.method == "eisenstein" else jacobi_by_definition
    value = fn(args.a, args.b)
    _emit(args, "jacobi", {"a": args.a, "b": args.b, "method": args.method}, value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    grid = GridSpec(
        a_max=args.grid[0],
        b_max=args.grid[1],
        odd_only=args.odd_only,
        seed=args.seed,
    )
    results = run_suites(args.suite, grid)
    inputs = {
        "grid": list(args.grid),
        "odd_only": args.odd_only,
        "seed": args.seed,
        "suite": args.suite,
    }
    if args.format == "plain":
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.check_id} cases={r.cases_run} failures={len(r.failures)} elapsed={r.elapsed:.3f}s")
            for f in r.failures:
                print(f"  {dict(f.inputs)} expected={f.expected} actual={f.actual}", file=sys.stderr)
    else:
        rows = [r.as_row() for r in results]
        if args.format == "csv":
            flat = [
                {
                    "check_id": row["check_id"],
                    "cases_run": row["cases_run"],
                    "failures": len(row["failures"]),
                    "elapsed": row["elapsed"],
                    "passed": row["passed"],
                }
                for row in rows
            ]
            _emit(args, "verify", inputs, flat,
                  ["check_id", "cases_run", "failures", "elapsed", "passed"])
        else:
            _emit(args, "verify", inputs, rows)
    return 0 if all(r.passed for r in results) else 2


def _cmd_table1(args: argparse.Namespace) -> int:
    result = reproduce_table1()
    if not result.passed:
        for f in result.failures:
            print(f"table1 mismatch: {dict(f.inputs)} expected={f.expected} actual={f.actual}",
                  file=sys.stderr)
        return 2
    rows = [{"alpha": alpha, "k": k, "n0": n0} for alpha, k, n0 in TABLE1_ROWS]
    _emit(args, "table1", {"a": TABLE1_PAIR[0], "b": TABLE1_PAIR[1]}, rows, ["alpha", "k", "n0"])
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="coinfloor", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain",
                        help="output format (default: plain)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("floorsum", parents=[common],
                       help="evaluate S(a, b, d) = sum of floor(i*b/a) for i = 1..d")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--naive", action="store_true", help="use the O(d) evaluator")
    p.set_defaults(handler=_cmd_floorsum)

    p = sub.add_parser("frobenius", parents=[common], help="largest nonrepresentable integer a*b - a - b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_frobenius)

    p = sub.add_parser("count", parents=[common], help="number of solutions of a*x + b*y = n")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("upto", parents=[common], help="representable integers in [0, k]")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_upto)

    p = sub.add_parser("best", parents=[common], help="closed-form threshold counts (needs b < a)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", type=int, help="single family point")
    group.add_argument("--all", action="store_true", help="every valid alpha")
    p.set_defaults(handler=_cmd_best)

    p = sub.add_parser("gaps", parents=[common], help="nonrepresentable numbers and their sums")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--sum", action="store_true", help="sum of the gaps")
    group.add_argument("--power", type=int, metavar="M", help="sum of gap**M")
    group.add_argument("--weighted", nargs=2, metavar=("LAMBDA", "M"),
                       help="sum of LAMBDA**(gap-1) * gap**M, exact rational")
    p.set_defaults(handler=_cmd_gaps)

    p = sub.add_parser("jacobi", parents=[common], help="Jacobi symbol (a/b) for odd b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=["eisenstein", "definition"], default="eisenstein")
    p.set_defaults(handler=_cmd_jacobi)

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--grid", nargs=2, type=int, metavar=("A", "B"), default=[60, 60])
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", choices=["all", "frobenius", "jacobi"], default="all")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table1", parents=[common],
                       help="verify and emit the reference threshold-count table for (29, 23)")
    p.set_defaults(handler=_cmd_table1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        err.parser.print_usage(sys.stderr)
        print(f"error: {err.message}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help exits through argparse
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
