"""Command-line interface.

Subcommands: decompose (decomposition + formula/DP cross-check), verify (the
full check suite), batch (seeded random-tree verification), dot (Graphviz
export).  Exit codes: 0 success, 1 usage or input error, 2 a verification
check or cross-check was refuted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import linalg
from . import matching as mt
from .decomposition import VerifyConfig, decompose, formulas, verify
from .experiments import BatchConfig, report_json, run_batch
from .tree import parse_tree, to_dot


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; here 2 is reserved for refuted
    verification, so usage errors exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_tree(path: str):
    if path == "-":
        return parse_tree(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(fh.read())


def _parse_range(s: str) -> tuple[int, int]:
    try:
        lo, hi = s.split("..")
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range A..B, got {s!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B in {s!r}")
    return a, b


def cmd_decompose(args: argparse.Namespace) -> int:
    tree = _load_tree(args.input)
    d = decompose(tree)
    f = formulas(tree, d)
    dp = mt.matching_count(tree)
    ind = mt.independence(tree)
    rank, nullity = linalg.rank_nullity(linalg.adjacency_matrix(tree))
    agree = (
        f.nu == dp.optimum
        and f.alpha == ind.alpha
        and f.m == dp.count
        and f.nullity == nullity
    )
    if args.format == "json":
        payload = {
            "n": tree.n,
            "edges": [list(e) for e in tree.edges],
            "decomposition": d.to_json_dict(),
            "rank": rank,
            "formulas": {"nu": f.nu, "alpha": f.alpha, "m": f.m, "nullity": f.nullity},
            "dynamic_programs": {
                "nu": dp.optimum,
                "alpha": ind.alpha,
                "m": dp.count,
                "nullity": nullity,
            },
            "agree": agree,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"n = {tree.n}")
        print(f"supp = {sorted(d.supp)}")
        print(f"core = {sorted(d.core)}")
        for p in d.s_parts:
            print(f"S-part {sorted(p.vertices)}: supp {sorted(p.supp)}, core {sorted(p.core)}")
        for p in d.n_parts:
            print(f"N-part {sorted(p.vertices)}")
        print(f"connection edges = {[list(e) for e in sorted(d.connection_edges)]}")
        print(f"nullity = {nullity}, rank = {rank}")
        print(f"formulas: nu={f.nu} alpha={f.alpha} m={f.m} nullity={f.nullity}")
        print(f"dynamic programs: nu={dp.optimum} alpha={ind.alpha} m={dp.count} nullity={nullity}")
        print(f"agree = {agree}")
    return 0 if agree else 2


def cmd_verify(args: argparse.Namespace) -> int:
    tree = _load_tree(args.input)
    report = verify(tree, VerifyConfig(oracle_bound=args.oracle_bound))
    if args.format == "json":
        payload = {"n": tree.n, **report.to_json_dict()}
        print(json.dumps(payload, indent=2))
    else:
        for c in report.checks:
            line = f"{c.status:<5} {c.name}"
            if c.details:
                line += f"  ({c.details})"
            print(line)
        print("verified" if report.passed else "REFUTED")
    return 0 if report.passed else 2


def cmd_batch(args: argparse.Namespace) -> int:
    n_min, n_max = args.n
    if n_max > args.oracle_bound:
        print(
            f"error: n range up to {n_max} exceeds the oracle bound {args.oracle_bound}; "
            "raise --oracle-bound explicitly to verify larger trees",
            file=sys.stderr,
        )
        return 1
    config = BatchConfig(
        count=args.count,
        n_min=n_min,
        n_max=n_max,
        seed=args.seed,
        oracle_bound=args.oracle_bound,
    )
    report = run_batch(config)
    if args.format == "json":
        print(report_json(report), end="")
    else:
        print(f"{report['passed']}/{report['total']} trees passed")
        for failure in report["failures"]:
            print(f"FAIL n={failure['n']} seed={failure['seed']}")
    return 0 if report["passed"] == report["total"] else 2


def cmd_dot(args: argparse.Namespace) -> int:
    tree = _load_tree(args.input)
    d = None if args.plain else decompose(tree)
    print(to_dot(tree, d), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nulltree", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a tree and cross-check the formulas")
    p.add_argument("--input", default="-", help="edge-list file, or - for stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the verification suite on one tree")
    p.add_argument("--input", default="-", help="edge-list file, or - for stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--oracle-bound", type=int, default=14, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="verify a batch of seeded random trees")
    p.add_argument("--count", type=int, default=100, metavar="N")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--n", type=_parse_range, default=(1, 14), metavar="A..B")
    p.add_argument("--oracle-bound", type=int, default=14, metavar="N")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("dot", help="emit Graphviz DOT, decorated with the decomposition")
    p.add_argument("--input", default="-", help="edge-list file, or - for stdin")
    p.add_argument("--plain", action="store_true", help="skip the decomposition decoration")
    p.set_defaults(func=cmd_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
