#!/usr/bin/env python3
"""Run the three randomized suites and write their JSON reports.

Defaults mirror the acceptance configuration (1000 verified trees, 200
rewiring samples, 200 contract samples per algorithm); rerunning with the
same arguments reproduces the reports byte for byte.
"""

import argparse
import pathlib
import sys

from nulltree.experiments import (
    BatchConfig,
    ContractConfig,
    RewireConfig,
    report_json,
    run_algorithm_contracts,
    run_batch,
    run_rewiring_stability,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000, help="trees in the batch suite")
    parser.add_argument("--samples", type=int, default=200, help="samples per sampler suite")
    parser.add_argument("--seed", type=int, default=7, help="seed for the batch suite")
    parser.add_argument("--out", default="reports", help="output directory")
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    batch = run_batch(BatchConfig(count=args.count, seed=args.seed))
    (out / "batch.json").write_text(report_json(batch))
    print(f"batch: {batch['passed']}/{batch['total']} trees passed")

    rewire = run_rewiring_stability(RewireConfig(samples=args.samples))
    (out / "rewiring.json").write_text(report_json(rewire))
    print(f"rewiring: {rewire['passed']}/{rewire['total']} samples stable")

    contracts = run_algorithm_contracts(ContractConfig(samples=args.samples))
    (out / "contracts.json").write_text(report_json(contracts))
    for name in ("desaturate", "reroute", "combine"):
        section = contracts[name]
        print(f"{name}: {section['passed']}/{section['total']} contracts held")

    all_ok = (
        batch["passed"] == batch["total"]
        and rewire["passed"] == rewire["total"]
        and all(contracts[k]["passed"] == contracts[k]["total"]
                for k in ("desaturate", "reroute", "combine"))
    )
    return 0 if all_ok else 2


if __name__ == "__main__":
    sys.exit(main())
