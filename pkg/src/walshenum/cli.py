"""Command-line surface for the enumeration pipelines.

Subcommands
-----------
cores        toroidal-core counts t_C(n) (vertex marginal)
crowns       crown counts by vertices and edges
projective   projective-planar table (planar networks into K5)
toroidal     non-projective-planar toroidal table
verify       run a self-check suite (oracle | gf | tables)

Exit codes: 0 success, 1 verification failure, 2 usage error.
Identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .tables import (crown_table, load_network_series,
                     projective_planar_table, toroidal_core_table,
                     toroidal_table)


def _emit(rows, columns, fmt) -> str:
    if fmt == "plain":
        return "\n".join(" ".join(str(v) for v in row) for row in rows)
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(str(v) for v in row) for row in rows]
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps({"columns": list(columns),
                           "rows": [list(row) for row in rows]})
    raise AssertionError(fmt)


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_cores(args) -> int:
    if not 1 <= args.max_n <= 64:
        return _fail_usage("--max-n must be between 1 and 64")
    rows = toroidal_core_table(args.max_n)
    print(_emit(rows, ("n", "count"), args.format))
    return 0


def cmd_crowns(args) -> int:
    if not 1 <= args.max_n <= 64:
        return _fail_usage("--max-n must be between 1 and 64")
    rows = crown_table(args.max_n)
    print(_emit(rows, ("n", "m", "count"), args.format))
    return 0


def _load_networks(args):
    if args.networks:
        return load_network_series(args.networks)
    return None


def cmd_projective(args) -> int:
    try:
        rows = projective_planar_table(args.max_n, _load_networks(args))
    except (ValueError, OSError) as exc:
        return _fail_usage(str(exc))
    print(_emit(rows, ("n", "m", "count"), args.format))
    return 0


def cmd_toroidal(args) -> int:
    try:
        rows = toroidal_table(args.max_n, _load_networks(args))
    except (ValueError, OSError) as exc:
        return _fail_usage(str(exc))
    print(_emit(rows, ("n", "m", "count"), args.format))
    return 0


def cmd_verify(args) -> int:
    checks = verify.SUITES[args.suite]()
    failures = 0
    for name, ok, detail in checks:
        if ok:
            print(f"ok   {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walshenum",
        description="Unlabelled enumeration of K3,3-free toroidal and "
                    "projective-planar graphs via Walsh index series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "csv", "json"),
                       default="plain")

    p = sub.add_parser("cores", help="toroidal-core counts by vertices")
    p.add_argument("--max-n", type=int, default=64)
    add_format(p)
    p.set_defaults(func=cmd_cores)

    p = sub.add_parser("crowns", help="crown counts by vertices and edges")
    p.add_argument("--max-n", type=int, default=64)
    add_format(p)
    p.set_defaults(func=cmd_crowns)

    p = sub.add_parser("projective",
                       help="projective-planar count table")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--networks", help="network-series file overriding the "
                                      "embedded planar data")
    add_format(p)
    p.set_defaults(func=cmd_projective)

    p = sub.add_parser("toroidal",
                       help="non-projective-planar toroidal count table")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--networks", help="network-series file overriding the "
                                      "embedded planar data")
    add_format(p)
    p.set_defaults(func=cmd_toroidal)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
