"""Command-line front end.

Commands: ``coeffs``, ``grunsky``, ``verify``, ``optimize``, ``list-functions``.
Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import bound
from .catalog import catalog_function, list_functions
from .errors import ParameterOutOfRange, UnknownCatalogEntry
from .grunsky import GrunskyTable, coefficients_from_grunsky, gamma3_from_grunsky, odd_grunsky
from .logcoeffs import gamma_closed_form, log_coefficients
from .verify import SUITES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MAX_TABLE_SIZE = 12


class UsageError(Exception):
    pass


def _num(v):
    """JSON encoding of a coefficient: a plain number when real, else ``[re, im]``."""
    v = complex(v)
    return v.real if v.imag == 0 else [v.real, v.imag]


def _entry(args, order: int):
    try:
        return catalog_function(args.function, args.param, order=order)
    except (UnknownCatalogEntry, ParameterOutOfRange) as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_coeffs(args) -> int:
    n = args.order
    if n < 1:
        raise UsageError("--order must be >= 1")
    entry = _entry(args, max(n + 1, 4))
    f = entry.series
    gammas = log_coefficients(f, n)
    a = [f.a(k) for k in range(1, n + 2)]
    closed = gamma_closed_form(f.a(2), f.a(3), f.a(4))
    residuals = [abs(complex(closed[k - 1]) - complex(gammas[k])) if k <= 3 else None for k in range(1, n + 1)]
    if args.format == "json":
        doc = {
            "function": entry.label,
            "order": n,
            "a": [_num(v) for v in a],
            "gamma": [_num(v) for v in gammas],
            "gamma_closed_form": [_num(v) for v in closed[:n]],
            "residual": max(r for r in residuals if r is not None),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        rows = []
        for k in range(1, n + 1):
            g = complex(gammas[k])
            c = complex(closed[k - 1]) if k <= 3 else None
            rows.append([
                k, repr(complex(a[k]).real), repr(complex(a[k]).imag), repr(g.real), repr(g.imag),
                "" if c is None else repr(c.real), "" if c is None else repr(c.imag),
                "" if residuals[k - 1] is None else repr(residuals[k - 1]),
            ])
        header = ["n", "a_re", "a_im", "gamma_re", "gamma_im", "gamma_closed_re", "gamma_closed_im", "residual"]
        _emit(_csv_text(header, rows), args.out)
    return EXIT_OK


def cmd_grunsky(args) -> int:
    m = args.size
    if not 1 <= m <= MAX_TABLE_SIZE:
        raise UsageError(f"--size must lie in [1, {MAX_TABLE_SIZE}]")
    entry = _entry(args, max(m + 1, 4))
    f = entry.series
    table = odd_grunsky(f, m)
    odd = range(1, m + 1, 2)
    entries = [[p, q, _num(table.w(p, q))] for p in odd for q in odd]
    doc = {"function": entry.label, "size": m, "provenance": table.provenance, "omega": entries}
    if m >= 3:
        rebuilt = coefficients_from_grunsky(table)
        direct = (f.a(2), f.a(3), f.a(4))
        g3 = gamma3_from_grunsky(table)
        g3_series = log_coefficients(f, 3)[3]
        doc["reconstructed"] = {k: _num(v) for k, v in zip(("a2", "a3", "a4"), rebuilt)}
        doc["direct"] = {k: _num(v) for k, v in zip(("a2", "a3", "a4"), direct)}
        doc["residual"] = max(abs(complex(r) - complex(d)) for r, d in zip(rebuilt, direct))
        doc["gamma3_identity"] = _num(g3)
        doc["gamma3_series"] = _num(g3_series)
        doc["gamma3_residual"] = abs(complex(g3) - complex(g3_series))
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        rows = [[p, q, repr(complex(table.w(p, q)).real), repr(complex(table.w(p, q)).imag)]
                for p in odd for q in odd]
        _emit(_csv_text(["p", "q", "omega_re", "omega_im"], rows), args.out)
    return EXIT_OK


def _load_tables(paths) -> list:
    tables = []
    for path in paths or ():
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise OSError(f"cannot read table {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"table {path} is not valid JSON: {exc}") from None
        try:
            tables.append((Path(path).stem, GrunskyTable.from_dict(data)))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"table {path} is malformed: {exc}") from None
    return tables


def cmd_verify(args) -> int:
    tables = _load_tables(args.table)
    report = run_verification(args.suite, tol=args.tol, seed=args.seed, grid_n=args.grid,
                              refine_tol=args.refine, extra_tables=tables)
    if args.format == "json":
        text = report.to_json()
    else:
        text = _csv_text(
            ["name", "status", "lhs", "rhs", "tolerance", "details"],
            [[c.name, c.status, repr(c.lhs), repr(c.rhs), repr(c.tolerance), c.details] for c in report.checks],
        )
    _emit(text, args.out)
    s = report.summary
    print(f"pass={s['pass']} fail={s['fail']} flagged={s['flagged']}", file=sys.stderr)
    for c in report.failures():
        print(f"FAIL {c.name}: {c.details}", file=sys.stderr)
    return report.exit_code


def write_surface(path, grid_n: int) -> None:
    """CSV sample of psi over the region: header ``a,t,psi``, ``grid_n**2`` rows."""
    with open(path, "w") as fh:
        fh.write("a,t,psi\n")
        for _, a, t, vals in bound.psi_grid(grid_n):
            block = np.column_stack([a.ravel(), t.ravel(), vals.ravel()])
            np.savetxt(fh, block, fmt="%.17g", delimiter=",")


def cmd_optimize(args) -> int:
    if args.grid < 2:
        raise UsageError("--grid must be >= 2")
    if not args.refine > 0:
        raise UsageError("--refine must be positive")
    res = bound.maximize_psi(args.grid, args.refine)
    if args.out is not None:
        write_surface(args.out, args.grid)
    doc = {
        "max_value": res.max_value,
        "argmax": [res.argmax.a, res.argmax.t],
        "edge": res.edge_attained,
        "grid": res.grid_resolution,
        "refine": res.refinement_tolerance,
        "grid_max": res.grid_max,
        "bound_constant": bound.bound_constant(),
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_list(args) -> int:
    rows = list_functions()
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        _emit(_csv_text(["name", "n_params", "defaults", "notes"],
                        [[r["name"], r["n_params"], " ".join(map(str, r["defaults"])), r["notes"]] for r in rows]),
              args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="univalent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    def function_args(p):
        p.add_argument("--function", required=True, help="catalog function name (see list-functions)")
        p.add_argument("--param", type=float, action="append", default=None,
                       help="function parameter; repeat for several")

    p = sub.add_parser("coeffs", help="Taylor and logarithmic coefficients of a catalog function")
    function_args(p)
    p.add_argument("--order", type=int, default=5, help="number of logarithmic coefficients")
    common(p)
    p.set_defaults(handler=cmd_coeffs)

    p = sub.add_parser("grunsky", help="odd Grunsky table of sqrt(f(z^2)) and coefficient reconstruction")
    function_args(p)
    p.add_argument("--size", type=int, default=3, help="largest Grunsky index kept")
    common(p)
    p.set_defaults(handler=cmd_grunsky)

    p = sub.add_parser("verify", help="run verification suites and write a report")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--grid", type=int, default=2001)
    p.add_argument("--refine", type=float, default=1e-12)
    p.add_argument("--table", action="append", default=None,
                   help="extra Grunsky table (JSON) screened against the inequality; repeatable")
    common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("optimize", help="maximize psi over the region")
    p.add_argument("--grid", type=int, default=2001)
    p.add_argument("--refine", type=float, default=1e-12)
    p.add_argument("--out", default=None, help="write a CSV surface sample of psi here")
    p.set_defaults(handler=cmd_optimize)

    p = sub.add_parser("list-functions", help="list catalog functions")
    common(p)
    p.set_defaults(handler=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
