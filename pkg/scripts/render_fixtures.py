#!/usr/bin/env python3
"""Render every fixture tree as an annotated DOT file.

Supported vertices are filled, core vertices carry class=core, and
connection edges are dashed, so `dot -Tsvg` gives a quick visual check
of the decomposition.
"""

import argparse
import pathlib
import sys

from nulltree.decomposition import decompose
from nulltree.tree import parse_tree, to_dot

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports/dot", help="output directory")
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for path in sorted(FIXTURES.glob("*.txt")):
        tree = parse_tree(path.read_text())
        d = decompose(tree)
        target = out / (path.stem + ".dot")
        target.write_text(to_dot(tree, d))
        print(f"{path.name}: n={tree.n} supp={len(d.supp)} core={len(d.core)} "
              f"-> {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
