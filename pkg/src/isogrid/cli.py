"""Command-line front end.

Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
3 resource refusal (overflow guard or oracle cap), 4 node budget
exhausted (constellation result is a lower bound only).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import census, constellation, genfunc, sequences
from .errors import GridTooLargeError, IsogridError
from .geometry import GridDims

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3
EXIT_BUDGET = 4

CLASS_CHOICES = ("all", "iso", "acute", "right", "obtuse")


def _parse_k_range(text: str) -> tuple[int, int]:
    """Parse 'A..B' (or a single 'A') into an inclusive range."""
    lo, sep, hi = text.partition("..")
    first = int(lo)
    last = int(hi) if sep else first
    if first < 1 or last < first:
        raise ValueError(f"bad k range: {text}")
    return first, last


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("ISOGRID_THREADS")
    return int(env) if env else 1


def _counts_line(counts: census.CensusCounts, cls: str) -> str:
    if cls != "all":
        return str(counts.by_class(cls))
    return (
        f"total {counts.total_iso}  acute {counts.acute_iso}  "
        f"right {counts.right_iso}  obtuse {counts.obtuse_iso}"
    )


def cmd_count(args) -> int:
    dims = GridDims(args.rows, args.cols)
    if args.method == "brute":
        counts = census.brute_force_census(dims)
    else:
        counts = census.apex_census(dims, threads=_threads(args))
    print(_counts_line(counts, args.shape_class))
    return EXIT_OK


def cmd_sequence(args) -> int:
    k_first, k_last = _parse_k_range(args.k)
    threads = _threads(args)
    rows = [census.census_row(args.rows, k, threads) for k in range(k_first, k_last + 1)]
    ks = range(k_first, k_last + 1)
    if args.format == "bfile":
        cls = args.shape_class if args.shape_class != "all" else "iso"
        for i, row in enumerate(rows):
            print(f"{args.offset + i} {row.by_class(cls)}")
    elif args.format == "csv":
        print("k,total,acute,right,obtuse")
        for k, row in zip(ks, rows):
            print(f"{k},{row.total_iso},{row.acute_iso},{row.right_iso},{row.obtuse_iso}")
    elif args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "k": k,
                        "total": row.total_iso,
                        "acute": row.acute_iso,
                        "right": row.right_iso,
                        "obtuse": row.obtuse_iso,
                    }
                    for k, row in zip(ks, rows)
                ]
            )
        )
    else:
        for k, row in zip(ks, rows):
            print(f"k={k}  {_counts_line(row, args.shape_class)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    table = sequences.build_table(args.rows, args.kmax, threads=_threads(args))
    ids = list(sequences.REGISTRY) if args.theorem == "all" else [args.theorem]
    reports = [sequences.check_recurrence(table, tid) for tid in ids]
    payload = {"n": args.rows, "k_max": args.kmax, "theorems": [], "violations": 0}
    for rep in reports:
        entry = {
            "id": rep.theorem_id,
            "checked": len(rep.k_checked),
            "violations": rep.violations,
            "boundary_defects": rep.boundary_defects,
        }
        payload["theorems"].append(entry)
        payload["violations"] += len(rep.violations)
        status = "ok" if rep.ok else f"FAIL ({len(rep.violations)} violations)"
        detail = ""
        if rep.boundary_defects:
            detail = "  defects " + ", ".join(f"k={k}: {d}" for k, d in rep.boundary_defects)
        print(f"{rep.theorem_id}: {status} ({len(rep.k_checked)} k checked){detail}")
    if args.theorem == "all":
        k_opt = sequences.optimal_K(table)
        payload["optimal_K"] = k_opt
        print(f"optimal K({args.rows}) = {k_opt}")
    print(json.dumps(payload))
    return EXIT_OK if payload["violations"] == 0 else EXIT_VERIFY_FAIL


def cmd_genfunc(args) -> int:
    cls = args.shape_class if args.shape_class != "all" else "iso"
    k_max = genfunc.fixture_table_length(args.rows)
    table = sequences.build_table(args.rows, k_max, threads=_threads(args))
    if args.check:
        results = genfunc.match_tables(table)
        failed = False
        for name, res in results.items():
            print(f"{name}: {'pass' if res.passed else 'FAIL ' + str(res.diffs())}")
            failed = failed or not res.passed
        return EXIT_VERIFY_FAIL if failed else EXIT_OK
    numerator = genfunc.numerator_from_sequence(table, cls)
    print(" ".join(str(c) for c in numerator) if numerator else "0")
    return EXIT_OK


def cmd_constellation(args) -> int:
    dims = GridDims(args.rows, args.cols)
    result = constellation.max_isosceles_free(
        dims, budget=args.budget, cell_cap=args.cell_cap
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rows": dims.rows,
                    "cols": dims.cols,
                    "t_value": result.t_value,
                    "s_value": result.s_value,
                    "exact": result.exact,
                    "nodes_explored": result.nodes_explored,
                    "points": [list(p) for p in result.witness.sorted_points()],
                }
            )
        )
    else:
        kind = "T" if result.exact else "T >="
        print(f"{kind}({dims.rows},{dims.cols}) = {result.t_value}  "
              f"S = {result.s_value}  nodes = {result.nodes_explored}")
        print(result.witness.picture())
        print("points:", " ".join(f"({r},{c})" for r, c in result.witness.sorted_points()))
    return EXIT_OK if result.exact else EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isogrid",
        description="Exact isosceles-triangle counting and search on integer grids",
    )
    parser.add_argument("--threads", type=int, default=None,
                        help="worker cap (falls back to ISOGRID_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="census of one grid")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--class", dest="shape_class", choices=CLASS_CHOICES, default="all")
    p.add_argument("--method", choices=("apex", "brute"), default="apex")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sequence", help="census over a k-range at fixed rows")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--k", required=True, help="inclusive range, e.g. 1..20")
    p.add_argument("--class", dest="shape_class", choices=CLASS_CHOICES, default="all")
    p.add_argument("--format", choices=("table", "csv", "json", "bfile"), default="table")
    p.add_argument("--offset", type=int, default=1, help="first b-file index")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="check recurrence claims against computed tables")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--theorem", default="all",
                   choices=["all", *sequences.REGISTRY], metavar="ID|all")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("genfunc", help="generating-function numerator from the sequence")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--class", dest="shape_class", choices=CLASS_CHOICES, default="all")
    p.add_argument("--check", action="store_true",
                   help="compare all four classes against the vendored references")
    p.set_defaults(func=cmd_genfunc)

    p = sub.add_parser("constellation", help="maximum isosceles-free point set")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--budget", type=int, default=constellation.DEFAULT_NODE_BUDGET)
    p.add_argument("--cell-cap", type=int, default=constellation.DEFAULT_CELL_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_constellation)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except GridTooLargeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (IsogridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point():  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
