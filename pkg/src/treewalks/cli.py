"""Command-line interface.

Subcommands: triangle, walks, poly, stable, verify.  Exit codes are
fixed: 0 success, 1 verification or fixture failure, 2 usage/domain
error.  All output is deterministic; JSON integers are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from treewalks import fixtures as fx
from treewalks import rlseq, verify
from treewalks.oracle import dp_walk_count
from treewalks.series import gf_series, gf_walk_counts, sqrt_series
from treewalks.triangles import TriangleTable, borel_table, catalan_table
from treewalks.walks import (
    walks_polynomial,
    walks_via_borel,
    walks_via_catalan,
    walks_via_components,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


def _render_table(rows: list[list[int]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([[str(e) for e in row] for row in rows])
    sep = "," if fmt == "csv" else " "
    return "\n".join(sep.join(str(e) for e in row) for row in rows)


def _cmd_triangle(args: argparse.Namespace) -> int:
    table: TriangleTable = (
        catalan_table(args.rows) if args.kind == "catalan" else borel_table(args.rows)
    )
    rows = [list(r) for r in table.rows]
    print(_render_table(rows, args.format))
    if args.check_fixture:
        fixture = fx.triangle_rows(args.kind, args.fixture_dir)
        depth = min(len(rows), len(fixture))
        for n in range(depth):
            if rows[n] != fixture[n]:
                print(
                    f"fixture mismatch: {args.kind} row {n}: "
                    f"computed {rows[n]}, fixture {fixture[n]}",
                    file=sys.stderr,
                )
                return EXIT_VERIFY
    return EXIT_OK


_METHODS = {
    "components": walks_via_components,
    "catalan": walks_via_catalan,
    "borel": walks_via_borel,
    "oracle": dp_walk_count,
}


def _cmd_walks(args: argparse.Namespace) -> int:
    n, delta = args.n, args.delta
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    methods = (
        ["components", "catalan", "borel", "gf", "oracle"]
        if args.method == "all"
        else [args.method]
    )
    if "gf" in methods and delta < 2:
        raise ValueError("the gf method requires delta >= 2")
    values: dict[str, int] = {}
    for m in methods:
        if m == "gf":
            values[m] = gf_walk_counts(delta, n)[n]
        else:
            values[m] = _METHODS[m](n, delta)
    if args.rational and "gf" in methods:
        # debugging view of the exact intermediate series, even degrees only
        root = sqrt_series(4 * (delta - 1), 2 * n + 1)
        f = gf_series(delta, n)
        for label, s in (("sqrt", root), ("f", f)):
            pretty = ", ".join(str(Fraction(c)) for c in s.coeffs[:: 2])
            print(f"# {label} even coefficients: {pretty}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps({m: str(v) for m, v in values.items()}))
    elif args.format == "csv":
        print("\n".join(f"{m},{v}" for m, v in values.items()))
    elif len(values) == 1:
        print(next(iter(values.values())))
    else:
        width = max(len(m) for m in values)
        print("\n".join(f"{m:<{width}}  {v}" for m, v in values.items()))
    if len(set(values.values())) > 1:
        print(f"method disagreement: {values}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_poly(args: argparse.Namespace) -> int:
    poly = walks_polynomial(args.n)
    if args.format == "json":
        print(poly.to_json())
    elif args.format == "csv":
        print(",".join(str(c) for c in poly.coefficient_list()))
    else:
        print(poly.render(ascii_only=args.ascii))
    if args.check_fixture:
        fixture = fx.polynomial_coefficients(args.fixture_dir)
        if args.n in fixture and poly.coefficient_list() != fixture[args.n]:
            print(
                f"fixture mismatch: polynomial n={args.n}: "
                f"computed {poly.coefficient_list()}, fixture {fixture[args.n]}",
                file=sys.stderr,
            )
            return EXIT_VERIFY
    return EXIT_OK


def _cmd_stable(args: argparse.Namespace) -> int:
    if args.method == "enumerated":
        table = rlseq.s_table_enumerated(args.n, cap=args.enum_cap)
    elif args.method == "closed":
        rows = [[1]] + [
            [rlseq.s_closed_form(m, k) for k in range(1, m + 1)]
            for m in range(1, args.n + 1)
        ]
        table = rlseq.STable(rows)
    else:
        table = rlseq.s_table_recurrence(args.n)
    rows = [table.row(0)] + [table.row(m) for m in range(1, args.n + 1)]
    print(_render_table(rows, args.format))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_all(
        max_n=args.max_n,
        max_delta=args.max_delta,
        enum_cap=args.enum_cap,
        fixture_dir=args.fixture_dir,
    )
    width = max(len(r.name) for r in results)
    for r in sorted(results, key=lambda r: r.name):
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  {status}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treewalks",
        description="Exact closed-walk counts on infinite regular trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    p = sub.add_parser("triangle", help="print Catalan's or Borel's triangle")
    p.add_argument("kind", choices=["catalan", "borel"])
    p.add_argument("--rows", type=int, required=True, help="largest row index N")
    add_format(p)
    p.add_argument("--check-fixture", action="store_true")
    p.add_argument("--fixture-dir", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("walks", help="count closed walks of length 2n")
    p.add_argument("--n", type=int, required=True, help="half-length of the walk")
    p.add_argument("--delta", type=int, required=True, help="tree degree")
    p.add_argument(
        "--method",
        choices=["components", "catalan", "borel", "gf", "oracle", "all"],
        default="catalan",
    )
    add_format(p)
    p.add_argument(
        "--rational",
        action="store_true",
        help="with gf: dump intermediate exact series to stderr",
    )
    p.set_defaults(func=_cmd_walks)

    p = sub.add_parser("poly", help="walk-count polynomial in the tree degree")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.add_argument("--ascii", action="store_true", help="render with 'd' and '^'")
    p.add_argument("--check-fixture", action="store_true")
    p.add_argument("--fixture-dir", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("stable", help="component-count table S(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method", choices=["recurrence", "enumerated", "closed"], default="recurrence"
    )
    p.add_argument("--enum-cap", type=int, default=rlseq.ENUM_CAP_DEFAULT)
    add_format(p)
    p.set_defaults(func=_cmd_stable)

    p = sub.add_parser("verify", help="run the cross-method invariant suite")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--max-delta", type=int, default=6)
    p.add_argument("--enum-cap", type=int, default=8)
    p.add_argument("--fixture-dir", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
