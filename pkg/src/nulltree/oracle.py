"""Exhaustive reference implementations for small trees.

These enumerate everything and therefore serve as ground truth for the
polynomial-time routines; every one is guarded by an OracleBound so a suite
cannot silently drift into exponential territory.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLargeError
from .tree import Edge, Tree


@dataclass(frozen=True)
class OracleBound:
    """Size guards for the exponential scans."""

    max_n: int = 14

    def check(self, tree: Tree) -> None:
        if tree.n > self.max_n:
            raise TooLargeError(
                f"{tree.n} vertices exceed the oracle bound of {self.max_n}"
            )


DEFAULT_BOUND = OracleBound()


def brute_matchings(tree: Tree, bound: OracleBound = DEFAULT_BOUND) -> tuple[int, int, list[frozenset[Edge]]]:
    """Enumerate every matching; return (matching number, count of maximum
    matchings, the maximum matchings themselves, sorted)."""
    bound.check(tree)
    edges = tree.edges
    best_size = 0
    best: list[frozenset[Edge]] = [frozenset()]

    def rec(i: int, used: frozenset[int], chosen: tuple[Edge, ...]) -> None:
        nonlocal best_size, best
        if i == len(edges):
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = [frozenset(chosen)]
            elif len(chosen) == best_size and chosen:
                best.append(frozenset(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, chosen + (edges[i],))

    rec(0, frozenset(), ())
    best.sort(key=lambda m: tuple(sorted(m)))
    return best_size, len(best), best


def _vertex_masks(tree: Tree) -> tuple[list[int], int]:
    adj = [0] * (tree.n + 1)
    for u, v in tree.edges:
        adj[u] |= 1 << (v - 1)
        adj[v] |= 1 << (u - 1)
    return adj, (1 << tree.n) - 1


def brute_independent_sets(tree: Tree, bound: OracleBound = DEFAULT_BOUND) -> tuple[int, int]:
    """(independence number, count of maximum independent sets) by bitmask scan."""
    bound.check(tree)
    adj, full = _vertex_masks(tree)
    best, count = 0, 1  # the empty set
    for mask in range(1, full + 1):
        if mask.bit_count() < best:
            continue
        ok = True
        mm = mask
        while mm:
            low = mm & -mm
            if adj[low.bit_length()] & mask:
                ok = False
                break
            mm ^= low
        if not ok:
            continue
        size = mask.bit_count()
        if size > best:
            best, count = size, 1
        elif size == best:
            count += 1
    return best, count


def brute_vertex_covers(tree: Tree, bound: OracleBound = DEFAULT_BOUND) -> tuple[int, int]:
    """(vertex cover number, count of minimum covers) by bitmask scan."""
    bound.check(tree)
    pairs = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in tree.edges]
    full = (1 << tree.n) - 1
    best, count = tree.n + 1, 0
    for mask in range(full + 1):
        if mask.bit_count() > best:
            continue
        if all(mask & p for p in pairs):
            size = mask.bit_count()
            if size < best:
                best, count = size, 1
            elif size == best:
                count += 1
    return best, count


def brute_dominating_sets(tree: Tree, bound: OracleBound = DEFAULT_BOUND) -> tuple[int, int]:
    """(domination number, count of minimum dominating sets) by bitmask scan."""
    bound.check(tree)
    adj, full = _vertex_masks(tree)
    closed = [0] + [adj[v] | (1 << (v - 1)) for v in range(1, tree.n + 1)]
    best, count = tree.n + 1, 0
    for mask in range(1, full + 1):
        if mask.bit_count() > best:
            continue
        covered = 0
        mm = mask
        while mm:
            low = mm & -mm
            covered |= closed[low.bit_length()]
            mm ^= low
        if covered == full:
            size = mask.bit_count()
            if size < best:
                best, count = size, 1
            elif size == best:
                count += 1
    return best, count


def brute_nullity(tree: Tree, bound: OracleBound = DEFAULT_BOUND) -> int:
    """Nullity as n minus the size of a largest nonsingular principal minor of
    the adjacency matrix, located by exhaustive subset search.

    Independent of Gaussian elimination on the full matrix: rank is computed
    as the largest k for which some k-subset of rows/columns is invertible.
    """
    bound.check(tree)
    from fractions import Fraction

    from .linalg import adjacency_matrix

    a = adjacency_matrix(tree)
    n = tree.n

    def invertible(idx: tuple[int, ...]) -> bool:
        k = len(idx)
        m = [[a[i][j] for j in idx] for i in idx]
        r = 0
        for c in range(k):
            pr = next((i for i in range(r, k) if m[i][c] != 0), None)
            if pr is None:
                return False
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(r + 1, k):
                if m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            r += 1
        return True

    import itertools

    rank = 0
    for k in range(n, 0, -1):
        if any(invertible(idx) for idx in itertools.combinations(range(n), k)):
            rank = k
            break
    return n - rank
