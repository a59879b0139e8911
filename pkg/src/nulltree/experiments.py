"""Seeded randomized suites over random labeled trees.

Three suites: full verification over a batch of random trees, null-space
stability under connection-edge rewiring, and contract checks for the
alternating-walk and vector-combination procedures.  Every suite is driven by
one seed and emits a plain dict whose JSON dump is byte-identical across runs
with the same configuration.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from . import matching as mt
from .decomposition import VerifyConfig, decompose, verify
from .tree import format_edge_list, random_tree, rewire


@dataclass(frozen=True)
class BatchConfig:
    count: int = 1000
    n_min: int = 1
    n_max: int = 14
    seed: int = 7
    oracle_bound: int = 14


def run_batch(config: BatchConfig = BatchConfig()) -> dict:
    """Verify `count` random trees with n in [n_min, n_max]; collect failures."""
    rng = random.Random(config.seed)
    vcfg = VerifyConfig(oracle_bound=config.oracle_bound)
    results = []
    failures = []
    passed = 0
    for index in range(config.count):
        n = rng.randint(config.n_min, config.n_max)
        tree_seed = rng.getrandbits(63)
        tree = random_tree(n, tree_seed)
        report = verify(tree, vcfg)
        results.append({"index": index, "n": n, "seed": tree_seed, "passed": report.passed})
        if report.passed:
            passed += 1
        else:
            failures.append(
                {
                    "index": index,
                    "n": n,
                    "seed": tree_seed,
                    "edge_list": format_edge_list(tree),
                    "failed_checks": [
                        {"name": c.name, "details": c.details} for c in report.failed_checks()
                    ],
                }
            )
    return {
        "suite": "batch-verification",
        "config": {
            "count": config.count,
            "n_min": config.n_min,
            "n_max": config.n_max,
            "seed": config.seed,
            "oracle_bound": config.oracle_bound,
        },
        "total": config.count,
        "passed": passed,
        "failures": failures,
        "results": results,
    }


@dataclass(frozen=True)
class RewireConfig:
    samples: int = 200
    n_min: int = 2
    n_max: int = 14
    seed: int = 11


def run_rewiring_stability(config: RewireConfig = RewireConfig()) -> dict:
    """Rewire one random connection edge per sampled tree and require the
    canonical null basis (hence support, nullity, rank) and the matching
    number to be unchanged.  Trees without connection edges are skipped and
    do not count toward `samples`."""
    rng = random.Random(config.seed)
    results = []
    passed = 0
    attempts = 0
    max_attempts = config.samples * 500
    while len(results) < config.samples:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("could not find enough trees with connection edges")
        n = rng.randint(config.n_min, config.n_max)
        tree_seed = rng.getrandbits(63)
        tree = random_tree(n, tree_seed)
        d = decompose(tree)
        if not d.connection_edges:
            continue
        e = rng.choice(sorted(d.connection_edges))
        core_end = e[0] if e[0] in d.core else e[1]
        n_end = e[1] if core_end == e[0] else e[0]
        s_part = next(p for p in d.s_parts if core_end in p.vertices)
        n_part = next(p for p in d.n_parts if n_end in p.vertices)
        u = rng.choice(sorted(s_part.core))
        v = rng.choice(sorted(n_part.vertices))
        rewired = rewire(tree, e, u, v, d)
        basis_after = linalg.null_space_basis(linalg.adjacency_matrix(rewired))
        ok = (
            basis_after == d.null_basis
            and mt.matching_count(rewired).optimum == mt.matching_count(tree).optimum
        )
        results.append(
            {
                "n": n,
                "seed": tree_seed,
                "edge": list(e),
                "u": u,
                "v": v,
                "ok": ok,
            }
        )
        if ok:
            passed += 1
    return {
        "suite": "rewiring-stability",
        "config": {
            "samples": config.samples,
            "n_min": config.n_min,
            "n_max": config.n_max,
            "seed": config.seed,
        },
        "total": config.samples,
        "passed": passed,
        "results": results,
    }


@dataclass(frozen=True)
class ContractConfig:
    samples: int = 200
    n_min: int = 2
    n_max: int = 14
    seed: int = 13


def _random_fraction(rng: random.Random) -> Fraction:
    if rng.random() < 0.35:
        return Fraction(0)
    num = rng.randint(-6, 6) or 1
    return Fraction(num, rng.randint(1, 5))


def run_algorithm_contracts(config: ContractConfig = ContractConfig()) -> dict:
    """Exercise desaturation, rerouting and full-support combination on random
    inputs; each sample records whether the documented post-conditions held."""
    rng = random.Random(config.seed)

    desaturate_results = []
    attempts = 0
    while len(desaturate_results) < config.samples:
        attempts += 1
        if attempts > config.samples * 500:
            raise RuntimeError("could not sample enough S-parts")
        tree = random_tree(rng.randint(config.n_min, config.n_max), rng.getrandbits(63))
        d = decompose(tree)
        parts = [p for p in d.s_parts if p.tree.n >= 3]
        if not parts:
            continue
        part = rng.choice(parts)
        s = part.tree
        m = mt.maximum_matching(s)
        local_supp = frozenset(part.local(v) for v in part.supp)
        saturated_supported = sorted(local_supp & m.vertices)
        if not saturated_supported:
            continue
        v = rng.choice(saturated_supported)
        shifted = mt.desaturate(s, m, v)
        ok = len(shifted) == len(m) and not shifted.saturates(v)
        desaturate_results.append({"n": s.n, "v": v, "ok": ok})

    reroute_results = []
    attempts = 0
    while len(reroute_results) < config.samples:
        attempts += 1
        if attempts > config.samples * 500:
            raise RuntimeError("could not sample enough connection edges")
        tree = random_tree(rng.randint(config.n_min, config.n_max), rng.getrandbits(63))
        d = decompose(tree)
        if not d.connection_edges:
            continue
        e = rng.choice(sorted(d.connection_edges))
        edges = [e]
        pool = list(tree.edges)
        rng.shuffle(pool)
        used = set(e)
        for u, v in pool:
            if u not in used and v not in used:
                edges.append((u, v))
                used.update((u, v))
        m = mt.Matching(edges)
        rerouted = mt.reroute_connection_edge(tree, d, m, e)
        ok = (
            len(rerouted) == len(m)
            and len(rerouted.edges & d.connection_edges) == len(m.edges & d.connection_edges) - 1
        )
        reroute_results.append({"n": tree.n, "edge": list(e), "ok": ok})

    combine_results = []
    for _ in range(config.samples):
        length = rng.randint(1, 10)
        k = rng.randint(1, 4)
        vectors = [
            tuple(_random_fraction(rng) for _ in range(length)) for _ in range(k)
        ]
        z = linalg.combine_full_support(vectors)
        union = linalg.support(vectors)
        ok = linalg.support([z]) == union and linalg.in_span(vectors, z)
        combine_results.append(
            {"length": length, "k": k, "support_size": len(union), "ok": ok}
        )

    def summary(results):
        return {"total": len(results), "passed": sum(1 for r in results if r["ok"])}

    return {
        "suite": "algorithm-contracts",
        "config": {
            "samples": config.samples,
            "n_min": config.n_min,
            "n_max": config.n_max,
            "seed": config.seed,
        },
        "desaturate": {**summary(desaturate_results), "results": desaturate_results},
        "reroute": {**summary(reroute_results), "results": reroute_results},
        "combine": {**summary(combine_results), "results": combine_results},
    }


def report_json(report: dict) -> str:
    """The canonical JSON form used for byte-identity comparisons."""
    return json.dumps(report, indent=2) + "\n"
