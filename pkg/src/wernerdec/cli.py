"""Command-line entry point: ``wernerdec {table1,region,decide,verify}``.

CSV output is UTF-8 with a header row and LF line endings; JSON output is one
object per line with exact rationals written as ``"num/den"``.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import checks
from ._rational import as_fraction, format_fraction, fraction_to_decimal, truncate
from .bounds import (analytic_criterion, analytic_threshold, classify_region, lp_threshold,
                     n1m1_criterion, positivity_criterion)
from .lp import is_decomposable_werner
from .werner import DimensionError

TABLE_DIMS = (2, 3, 5, 10)
TABLE_NS = tuple(range(1, 9))
EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    d: int | None = None
    n: int | None = None
    m: int | None = None
    p1: Fraction | None = None
    p2: Fraction | None = None
    grid: int = 201
    tol: Fraction | None = None
    seed: int = 0
    output_path: str | None = None
    format: str = "csv"
    jobs: int = 1
    samples: int = 50


class CliError(Exception):
    pass


def parse_rational(text):
    try:
        return as_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a decimal or a/b fraction: {text!r}") from exc


def _row_text(rows, fmt):
    if not rows:
        return ""
    buf = io.StringIO()
    if fmt == "json":
        for row in rows:
            buf.write(json.dumps(row) + "\n")
    else:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def emit(rows, cfg):
    text = _row_text(rows, cfg.format)
    if cfg.output_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {cfg.output_path}: {exc.strerror or exc}") from exc


def _pool_map(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))  # map keeps submission order


def _table_cell(args):
    d, n, tol = args
    res = lp_threshold(n, d, tol)
    return d, n, res, analytic_threshold(n, d)


def cmd_table1(cfg):
    tol = cfg.tol if cfg.tol is not None else Fraction(1, 10**6)
    dims = (cfg.d,) if cfg.d is not None else TABLE_DIMS
    ns = (cfg.n,) if cfg.n is not None else TABLE_NS
    cells = _pool_map(_table_cell, [(d, n, tol) for d in dims for n in ns], cfg.jobs)
    rows = []
    for d, n, res, bound in cells:
        row = {"d": d, "n": n, "numerical_threshold": truncate(res.lower),
               "analytic_bound": truncate(bound)}
        if cfg.format == "json":
            row["lower"] = format_fraction(res.lower)
            row["upper"] = format_fraction(res.upper)
        rows.append(row)
    emit(rows, cfg)
    return EXIT_OK


def _region_row(args):
    d, i, grid = args
    p1 = Fraction(i, grid - 1)
    return [(p1, Fraction(j, grid - 1), classify_region(d, p1, Fraction(j, grid - 1)).value)
            for j in range(grid)]


def cmd_region(cfg):
    if cfg.grid < 2:
        raise CliError("grid must be >= 2")
    d = cfg.d if cfg.d is not None else 3
    chunks = _pool_map(_region_row, [(d, i, cfg.grid) for i in range(cfg.grid)], cfg.jobs)
    rows = []
    for chunk in chunks:
        for p1, p2, label in chunk:
            if cfg.format == "json":
                rows.append({"p1": format_fraction(p1), "p2": format_fraction(p2), "class": label})
            else:
                rows.append({"p1": fraction_to_decimal(p1, 10), "p2": fraction_to_decimal(p2, 10),
                             "class": label})
    emit(rows, cfg)
    return EXIT_OK


def _format_q(Q):
    return ";".join(" ".join(format_fraction(x) for x in row) for row in Q)


def cmd_decide(cfg):
    n = cfg.n if cfg.n is not None else 1
    m = cfg.m if cfg.m is not None else n
    d = cfg.d if cfg.d is not None else 2
    if cfg.p1 is None:
        raise CliError("decide needs --p1")
    p1 = cfg.p1
    p2 = cfg.p2 if cfg.p2 is not None else p1
    dec = is_decomposable_werner(n, m, d, p1, p2)
    row = {
        "n": n, "m": m, "d": d,
        "p1": format_fraction(p1), "p2": format_fraction(p2),
        "value": format_fraction(dec.value),
        "decomposable": dec.decomposable,
        "boundary": dec.boundary,
        "witness_q": _format_q(dec.outcome.witness_q),
        # closed-form cross-checks; empty where they do not apply
        "n1m1_decomposable": n1m1_criterion(d, p1, p2) >= 0 if n == m == 1 else "",
        "analytic_nondecomposable": analytic_criterion(n, d, p1, p2) < 0 if n == m else "",
        "single_copy_positive": positivity_criterion(d, p1, p2),
    }
    emit([row], cfg)
    return EXIT_OK if dec.decomposable else EXIT_NO


def cmd_verify(cfg):
    results = checks.run_all(seed=cfg.seed, tol=cfg.tol, samples=cfg.samples)
    for res in results:
        print(res.summary())
        for label in res.failures[:5]:
            print(f"  failed: {label}")
    ok = all(r.ok for r in results)
    print("verify: PASS" if ok else "verify: FAIL")
    return EXIT_OK if ok else EXIT_NO


COMMANDS = {"table1": cmd_table1, "region": cmd_region, "decide": cmd_decide,
            "verify": cmd_verify}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="local dimension (>= 2)")
    common.add_argument("--n", type=int, help="copies of W_p1")
    common.add_argument("--m", type=int, help="copies of theta o W_p2 (default: n)")
    common.add_argument("--p1", type=parse_rational, help="Werner parameter, decimal or a/b")
    common.add_argument("--p2", type=parse_rational, help="second parameter (default: p1)")
    common.add_argument("--grid", type=int, default=201, help="points per axis for region")
    common.add_argument("--tol", type=parse_rational,
                        help="bisection width for table1; tolerance override for verify")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", dest="output_path", help="write to this path instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for table1/region")
    common.add_argument("--samples", type=int, default=50,
                        help="random matrices per case in the verify suites")
    parser = argparse.ArgumentParser(
        prog="wernerdec",
        description="Exact decomposability of tensor powers of Werner maps.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table1", parents=[common], help="LP thresholds and analytic bounds")
    sub.add_parser("region", parents=[common], help="classify a (p1, p2) grid")
    sub.add_parser("decide", parents=[common], help="exact LP verdict for one instance")
    sub.add_parser("verify", parents=[common], help="oracle equivalence suites")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        return COMMANDS[cfg.command](cfg)
    except (CliError, DimensionError, ValueError, TypeError) as exc:
        print(f"wernerdec {cfg.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
