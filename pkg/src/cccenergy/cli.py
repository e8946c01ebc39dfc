"""Command-line driver.

Subcommands:
  compute  one (p, m, n) cell, human-readable summary plus optional export
  verify   a parameter grid, exit 0 iff every m >= n row passes all checks
  export   same grid machinery, but the report file is the product

Exit codes: 0 all verified, 1 mathematical disagreement, 2 usage error,
3 oracle required but the order cap is exceeded.  Caps can come from the
environment (CCC_MAX_ORDER, CCC_MATRIX_CAP); explicit flags win.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import group, report, spectral
from .errors import CCCError

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_ORACLE_UNAVAILABLE = 3

#: Default grid ceiling for verify/export; the hard enumeration cap
#: (group.DEFAULT_MAX_ORDER) stays available via --max-order.
DEFAULT_GRID_MAX_ORDER = 4096


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"invalid {name}={raw!r}")


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi or lo)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccc-energy",
        description="Exact spectra and energies of commuting conjugacy class "
        "graphs of the groups G(p, m, n), with brute-force cross-validation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--max-order", type=int, default=None,
                        help="largest group order the brute-force oracle will enumerate")
        sp.add_argument("--matrix-cap", type=int, default=None,
                        help="hard dimension cap for the characteristic polynomial")
        sp.add_argument("--charpoly-limit", type=int,
                        default=report.DEFAULT_CHARPOLY_LIMIT,
                        help="largest graph for which the char-poly check runs")
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        sp.add_argument("-o", "--output", default=None, help="write report to this path")

    comp = sub.add_parser("compute", help="one parameter cell")
    comp.add_argument("-p", type=int, required=True)
    comp.add_argument("-m", type=int, required=True)
    comp.add_argument("-n", type=int, required=True)
    oracle = comp.add_mutually_exclusive_group()
    oracle.add_argument("--oracle", dest="oracle", action="store_true", default=True)
    oracle.add_argument("--no-oracle", dest="oracle", action="store_false")
    comp.add_argument("--require-oracle", action="store_true",
                      help="fail (exit 3) instead of skipping the oracle")
    comp.add_argument("--canonicalize", action="store_true",
                      help="swap (m, n) to the isomorphic triple with m >= n")
    add_common(comp)

    for name, doc in (("verify", "run a grid and check every closed form"),
                      ("export", "run a grid and write the report file")):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument("--primes", required=True,
                        help="comma-separated primes, e.g. 2,3,5")
        sp.add_argument("--m-range", type=_parse_range, default=None, metavar="LO:HI")
        sp.add_argument("--n-range", type=_parse_range, default=None, metavar="LO:HI")
        sp.add_argument("--include-swapped", action="store_true",
                        help="also run the m < n cells (annotated, never failed)")
        sp.add_argument("--no-oracle", dest="oracle", action="store_false", default=True)
        add_common(sp)

    return parser


def _caps(args) -> tuple[int, int]:
    max_order = args.max_order
    if max_order is None:
        max_order = _env_int("CCC_MAX_ORDER", group.DEFAULT_MAX_ORDER)
    matrix_cap = args.matrix_cap
    if matrix_cap is None:
        matrix_cap = _env_int("CCC_MATRIX_CAP", spectral.DEFAULT_MATRIX_CAP)
    return max_order, matrix_cap


def _emit(rows, args) -> None:
    if args.format is None and args.output is None:
        return
    fmt = args.format or "csv"
    if args.output:
        report.export(rows, fmt, args.output)
    else:
        payload = report.to_csv(rows) if fmt == "csv" else report.to_json(rows)
        sys.stdout.write(payload)


def _print_summary(row: report.SweepRow) -> None:
    print(f"G({row.p},{row.m},{row.n})  order {row.order}")
    print(f"  graph: {row.decomposition}  |V|={row.num_vertices} |e|={row.num_edges}")
    print(
        f"  E={report.format_fraction(row.energies.e)}"
        f"  LE={report.format_fraction(row.energies.le)}"
        f"  LE+={report.format_fraction(row.energies.le_plus)}"
    )
    print(f"  ordering: {row.ordering_case}")
    cls = row.classification
    flags = [
        name
        for name, value in (
            ("hyperenergetic", cls.hyperenergetic),
            ("borderenergetic", cls.borderenergetic),
            ("L-hyperenergetic", cls.l_hyperenergetic),
            ("L-borderenergetic", cls.l_borderenergetic),
            ("Q-hyperenergetic", cls.q_hyperenergetic),
            ("Q-borderenergetic", cls.q_borderenergetic),
        )
        if value
    ]
    print(f"  classification: {', '.join(flags) if flags else 'none of the six'}")
    print(f"  super integral: {row.super_integral}")
    if row.oracle_agrees is not None:
        print(f"  oracle agrees: {row.oracle_agrees}")
    for warning in row.warnings:
        print(f"  warning: {warning}")


def cmd_compute(args) -> int:
    max_order, matrix_cap = _caps(args)
    try:
        params = group.make_params(args.p, args.m, args.n,
                                   canonicalize=args.canonicalize,
                                   max_order=1 << 200)
    except CCCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.require_oracle and params.order > max_order:
        print(
            f"error: oracle required but order {params.order} exceeds cap {max_order}",
            file=sys.stderr,
        )
        return EXIT_ORACLE_UNAVAILABLE
    row = report.run_cell(
        args.p, args.m, args.n,
        oracle=args.oracle,
        max_order=max_order,
        matrix_cap=matrix_cap,
        charpoly_limit=args.charpoly_limit,
        canonicalize=args.canonicalize,
    )
    _print_summary(row)
    _emit([row], args)
    return EXIT_OK if row.passed else EXIT_DISAGREEMENT


def _grid_rows(args):
    max_order, matrix_cap = _caps(args)
    grid_order = args.max_order
    if grid_order is None:
        grid_order = min(_env_int("CCC_MAX_ORDER", DEFAULT_GRID_MAX_ORDER), max_order)
    try:
        primes = [int(x) for x in args.primes.split(",") if x.strip()]
    except ValueError:
        raise SystemExit("invalid --primes")
    for p in primes:
        if not group.is_prime(p):
            print(f"error: {p} is not prime", file=sys.stderr)
            return None
    cells = report.grid_cells(
        primes,
        max_order=grid_order,
        m_range=args.m_range,
        n_range=args.n_range,
        include_swapped=args.include_swapped,
    )
    if not cells:
        print("error: empty grid", file=sys.stderr)
        return None
    return report.run_grid(
        cells,
        oracle=args.oracle,
        max_order=max_order,
        matrix_cap=matrix_cap,
        charpoly_limit=args.charpoly_limit,
    )


def cmd_verify(args) -> int:
    rows = _grid_rows(args)
    if rows is None:
        return EXIT_USAGE
    failed = [row for row in rows if not row.passed]
    for row in rows:
        status = "ok" if row.passed else "FAIL"
        note = f" [{';'.join(row.warnings)}]" if row.warnings else ""
        print(f"{status}  G({row.p},{row.m},{row.n})  {row.decomposition}{note}")
    _emit(rows, args)
    print(f"{len(rows) - len(failed)}/{len(rows)} cells verified")
    return EXIT_DISAGREEMENT if failed else EXIT_OK


def cmd_export(args) -> int:
    if args.output is None:
        print("error: export requires -o/--output", file=sys.stderr)
        return EXIT_USAGE
    rows = _grid_rows(args)
    if rows is None:
        return EXIT_USAGE
    report.export(rows, args.format or "csv", args.output)
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; normalize others
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_export(args)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
