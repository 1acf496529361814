"""Command line front end.

    polyint eval   --sign minus --a 1 --b 1 --p 0 --t 2
    polyint verify --grid default --tol 1e-9 --jobs 4
    polyint verify --grid file points.csv
    polyint sum    --kind plain --p 3 --t 4 --r 1

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .closed_form import IntegralParams, evaluate
from .errors import DomainError, NonConvergenceError, PolyintError
from .euler_sums import ALTERNATING, PLAIN, EulerSumSpec, euler_sum, lookup_closed_form
from .quadrature import integrate_line

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NONCONV = 3

VERIFY_TOL = 1e-9
SERIES_TOL = 1e-11
ORACLE_TOL = 1e-12

REPORT_KEYS = ("sign", "a", "b", "p", "t", "q", "A", "B", "C", "total_re", "total_im",
               "oracle_re", "oracle_im", "abs_diff", "rel_diff", "tol", "pass", "runtime_ms")
EVAL_KEYS = ("sign", "a", "b", "p", "t", "q", "A", "B", "C", "total_re", "total_im",
             "abs_error_estimate", "converged")
SUM_KEYS = ("kind", "p", "t", "r", "weight", "value", "abs_error_estimate", "terms_used",
            "converged", "closed_form", "expression", "abs_diff")
GRID_HEADER = ("sign", "a", "b", "p", "t")


class UsageError(Exception):
    pass


def format_value(v) -> str:
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return json.dumps(v)
    if isinstance(v, float):
        if v != v or v in (float("inf"), float("-inf")):
            return "null"
        return format(v + 0.0, ".17g")  # + 0.0 drops the sign of -0.0
    raise TypeError(f"cannot serialise {type(v).__name__}")


def dumps_report(report: dict, keys: Sequence[str]) -> str:
    """One JSON object with keys in the given order and 17-digit floats."""
    return "{" + ", ".join(f"{json.dumps(k)}: {format_value(report[k])}" for k in keys) + "}"


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return format_value(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def _emit(reports: Iterable[dict], keys: Sequence[str], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(keys)
        for r in reports:
            writer.writerow([_csv_cell(r[k]) for k in keys])
            out.flush()
    elif fmt == "text":
        for r in reports:
            width = max(len(k) for k in keys)
            for k in keys:
                out.write(f"{k:<{width}}  {_csv_cell(r[k])}\n")
            out.write("\n")
    else:
        for r in reports:
            out.write(dumps_report(r, keys) + "\n")
            out.flush()


def _params(sign: str, a: float, b: float, p: int, t: int) -> IntegralParams:
    try:
        return IntegralParams(sign, float(a), float(b), int(p), int(t))
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args, out=sys.stdout) -> int:
    params = _params(args.sign, args.a, args.b, args.p, args.t)
    res = evaluate(params, tol=args.tol)
    report = {"sign": params.sign, "a": params.a, "b": params.b, "p": params.p, "t": params.t,
              "q": params.q, "A": res.A, "B": res.B, "C": res.C,
              "total_re": res.total.real, "total_im": res.total.imag,
              "abs_error_estimate": res.abs_error_estimate, "converged": res.converged}
    _emit([report], EVAL_KEYS, args.format, out)
    return EXIT_OK if res.converged else EXIT_NONCONV


def default_grid() -> list[IntegralParams]:
    grid = []
    for sign in ("plus", "minus"):
        for q in (0.5, 1.0, 2.0, 3.0):
            for a, b in ((q, 1.0), (2 * q, 2.0), (-q, -1.0)):
                for p in range(4):
                    for t in range(1, 5):
                        grid.append(IntegralParams(sign, a, b, p, t))
    return grid


def read_grid(text: str) -> list[IntegralParams]:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows or tuple(c.strip() for c in rows[0]) != GRID_HEADER:
        raise UsageError("grid file must start with the header sign,a,b,p,t")
    grid = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(GRID_HEADER):
            raise UsageError(f"grid line {lineno}: expected 5 fields, got {len(row)}")
        sign, a, b, p, t = (c.strip() for c in row)
        try:
            fa, fb, ip, it = float(a), float(b), int(p), int(t)
        except ValueError:
            raise UsageError(f"grid line {lineno}: cannot parse {row}") from None
        grid.append(_params(sign, fa, fb, ip, it))
    if not grid:
        raise UsageError("grid file has no points")
    return grid


def verify_point(params: IntegralParams, tol: float = VERIFY_TOL) -> dict:
    start = time.perf_counter()
    closed = evaluate(params)
    oracle = integrate_line(params, tol=ORACLE_TOL)
    elapsed = (time.perf_counter() - start) * 1e3
    abs_diff = abs(closed.total - oracle.value)
    scale = max(abs(closed.total), abs(oracle.value))
    rel_diff = abs_diff / scale if scale > 0 else 0.0
    return {"sign": params.sign, "a": params.a, "b": params.b, "p": params.p, "t": params.t,
            "q": params.q, "A": closed.A, "B": closed.B, "C": closed.C,
            "total_re": closed.total.real, "total_im": closed.total.imag,
            "oracle_re": oracle.value.real, "oracle_im": oracle.value.imag,
            "abs_diff": abs_diff, "rel_diff": rel_diff, "tol": tol,
            "pass": abs_diff <= tol or rel_diff <= tol, "runtime_ms": elapsed,
            "_converged": closed.converged and oracle.converged}


def _verify_star(item):
    return verify_point(*item)


def cmd_verify(args, out=sys.stdout) -> int:
    spec = args.grid
    if spec == ["default"]:
        grid = default_grid()
    else:
        path = spec[1] if len(spec) == 2 and spec[0] == "file" else spec[0] if len(spec) == 1 else None
        if path is None:
            raise UsageError("--grid takes 'default', 'file PATH' or PATH")
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read grid file: {exc}") from None
        grid = read_grid(text)
    items = [(params, args.tol) for params in grid]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_star, items))  # map keeps grid order
    else:
        reports = [_verify_star(item) for item in items]
    _emit(reports, REPORT_KEYS, args.format, out)
    if not all(r["_converged"] for r in reports):
        return EXIT_NONCONV
    return EXIT_OK if all(r["pass"] for r in reports) else EXIT_FAIL


def cmd_sum(args, out=sys.stdout) -> int:
    kind = PLAIN if args.kind == "plain" else ALTERNATING
    try:
        spec = EulerSumSpec(kind, args.p, args.t, args.r)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    res = euler_sum(spec, tol=args.tol)
    known = lookup_closed_form(spec)
    report = {"kind": args.kind, "p": spec.p, "t": spec.t, "r": float(spec.r),
              "weight": spec.weight, "value": res.value,
              "abs_error_estimate": res.abs_error_estimate, "terms_used": res.terms_used,
              "converged": res.converged,
              "closed_form": None if known is None else known.value,
              "expression": None if known is None else known.expression,
              "abs_diff": None if known is None else abs(res.value - known.value)}
    _emit([report], SUM_KEYS, args.format, out)
    return EXIT_OK if res.converged else EXIT_NONCONV


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyint", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="closed-form value of I+-(a, b, p, t)")
    ev.add_argument("--sign", choices=("plus", "minus"), required=True)
    ev.add_argument("--a", type=float, required=True)
    ev.add_argument("--b", type=float, required=True)
    ev.add_argument("--p", type=int, required=True)
    ev.add_argument("--t", type=int, required=True)
    ev.add_argument("--tol", type=float, default=1e-13)
    ev.add_argument("--format", choices=("json", "csv", "text"), default="json")
    ev.set_defaults(func=cmd_eval)

    ve = sub.add_parser("verify", help="closed form against quadrature over a grid")
    ve.add_argument("--grid", nargs="+", default=["default"], metavar="default|file PATH")
    ve.add_argument("--tol", type=float, default=VERIFY_TOL)
    ve.add_argument("--jobs", type=_positive_int, default=1)
    ve.add_argument("--format", choices=("json", "csv"), default="json")
    ve.set_defaults(func=cmd_verify)

    su = sub.add_parser("sum", help="linear harmonic Euler sum")
    su.add_argument("--kind", choices=("plain", "alt"), required=True)
    su.add_argument("--p", type=int, required=True)
    su.add_argument("--t", type=int, required=True)
    su.add_argument("--r", type=float, default=1.0)
    su.add_argument("--tol", type=float, default=SERIES_TOL)
    su.add_argument("--format", choices=("json", "csv", "text"), default="json")
    su.set_defaults(func=cmd_sum)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polyint: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergenceError as exc:
        print(f"polyint: no convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONV
    except DomainError as exc:
        print(f"polyint: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolyintError as exc:
        print(f"polyint: {exc}", file=sys.stderr)
        return EXIT_NONCONV
