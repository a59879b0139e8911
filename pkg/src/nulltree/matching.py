"""Matchings, independent sets, vertex covers and domination on trees.

Exact dynamic programs (optimum sizes with counts), full enumeration of
maximum matchings with an explicit count guard, the Edmond-Gallai vertex set,
and the two alternating-walk procedures: desaturating a supported vertex and
rerouting a matching off a connection edge.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterable, NamedTuple, Optional

from . import linalg
from .errors import (
    CoreTooLargeError,
    EdgeNotInMatchingError,
    EmptyCoreError,
    NotConnectionEdgeError,
    NotMaximumMatchingError,
    NotSTreeError,
    TooLargeError,
    TruncatedError,
    VertexNotSupportedError,
    VertexUnsaturatedError,
)
from .tree import Edge, Tree, delete_vertex, induced_components, sorted_edge


class Matching:
    """A set of pairwise vertex-disjoint edges; hashable, read-only."""

    __slots__ = ("edges",)

    def __init__(self, edges: Iterable[tuple[int, int]]) -> None:
        norm = frozenset(sorted_edge(u, v) for u, v in edges)
        used: set[int] = set()
        for u, v in norm:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u in used or v in used:
                raise ValueError("matching edges must be vertex-disjoint")
            used.add(u)
            used.add(v)
        self.edges: frozenset[Edge] = norm

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def saturates(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def pairs(self) -> list[list[int]]:
        """Sorted [u, v] pairs, the JSON form."""
        return [list(e) for e in sorted(self.edges)]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __contains__(self, e) -> bool:
        return sorted_edge(*e) in self.edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({self.pairs()})"


class CountResult(NamedTuple):
    optimum: int
    count: int


class IndependenceResult(NamedTuple):
    alpha: int
    count: int
    witness: frozenset[int]


class CoverResult(NamedTuple):
    tau: int
    count: int
    witness: frozenset[int]


def _check_edges_in_tree(tree: Tree, matching: Matching) -> None:
    for u, v in matching.edges:
        if not tree.has_edge(u, v):
            raise ValueError(f"matching edge {{{u},{v}}} is not an edge of the tree")


def _rooted(tree: Tree, root: int = 1):
    """BFS order, parent map and children lists (children ascending)."""
    parent = {root: 0}
    order = [root]
    for x in order:
        for y in tree.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
    children: dict[int, list[int]] = {v: [] for v in tree.vertices()}
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, parent, children


def maximum_matching(tree: Tree) -> Matching:
    """One maximum matching by leaf peeling, smallest leaf label first.

    Matching a leaf to its neighbor is always safe on a tree, so the greedy
    result is maximum.
    """
    adj = {v: set(tree.neighbors(v)) for v in tree.vertices()}
    alive = set(tree.vertices())
    heap = [v for v in tree.vertices() if len(adj[v]) == 1]
    heapq.heapify(heap)
    edges = []
    while heap:
        v = heapq.heappop(heap)
        if v not in alive or len(adj[v]) != 1:
            continue
        u = next(iter(adj[v]))
        edges.append(sorted_edge(u, v))
        alive.discard(v)
        alive.discard(u)
        adj[v].clear()
        for w in adj[u]:
            if w == v:
                continue
            adj[w].discard(u)
            if len(adj[w]) == 1 and w in alive:
                heapq.heappush(heap, w)
        adj[u].clear()
    return Matching(edges)


def _best(a: Optional[tuple[int, int]], b: Optional[tuple[int, int]]) -> tuple[int, int]:
    """Merge (size, count) states: larger size wins, equal sizes add counts."""
    if a is None:
        assert b is not None
        return b
    if b is None:
        return a
    if a[0] > b[0]:
        return a
    if b[0] > a[0]:
        return b
    return (a[0], a[1] + b[1])


def _matching_tables(tree: Tree, root: int = 1):
    """Per-vertex (size, count) tables: state 0 leaves the vertex unmatched in
    its subtree, state 1 matches it to one of its children (None when it has
    no children)."""
    order, _, children = _rooted(tree, root)
    up0: dict[int, tuple[int, int]] = {}
    up1: dict[int, Optional[tuple[int, int]]] = {}
    for v in reversed(order):
        ch = children[v]
        size0, cnt0 = 0, 1
        for c in ch:
            s, k = _best(up0[c], up1[c])
            size0 += s
            cnt0 *= k
        best1: Optional[tuple[int, int]] = None
        for c in ch:
            s = up0[c][0] + 1
            k = up0[c][1]
            for o in ch:
                if o == c:
                    continue
                so, ko = _best(up0[o], up1[o])
                s += so
                k *= ko
            best1 = _best(best1, (s, k))
        up0[v] = (size0, cnt0)
        up1[v] = best1
    return order, children, up0, up1


def matching_count(tree: Tree) -> CountResult:
    """Matching number and the number of maximum matchings, by subtree DP."""
    _, _, up0, up1 = _matching_tables(tree)
    return CountResult(*_best(up0[1], up1[1]))


def matching_number(tree: Tree) -> int:
    return matching_count(tree).optimum


def enumerate_maximum_matchings(tree: Tree, limit: int = 20000) -> list[Matching]:
    """All maximum matchings, sorted; raises if the DP count exceeds limit."""
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    total = matching_count(tree)
    if total.count > limit:
        raise TruncatedError(f"{total.count} maximum matchings exceed limit {limit}")
    order, children, up0, up1 = _matching_tables(tree)
    cache: dict[tuple[int, int], list[tuple[Edge, ...]]] = {}

    def child_options(c: int) -> list[tuple[Edge, ...]]:
        best_size = _best(up0[c], up1[c])[0]
        opts: list[tuple[Edge, ...]] = []
        if up0[c][0] == best_size:
            opts.extend(enum(c, 0))
        if up1[c] is not None and up1[c][0] == best_size:
            opts.extend(enum(c, 1))
        return opts

    def enum(v: int, state: int) -> list[tuple[Edge, ...]]:
        key = (v, state)
        if key in cache:
            return cache[key]
        ch = children[v]
        results: list[tuple[Edge, ...]] = []
        if state == 0:
            for combo in itertools.product(*(child_options(c) for c in ch)):
                results.append(tuple(e for part in combo for e in part))
        else:
            assert up1[v] is not None
            target = up1[v][0]
            for c in ch:
                size_with_c = up0[c][0] + 1 + sum(
                    _best(up0[o], up1[o])[0] for o in ch if o != c
                )
                if size_with_c != target:
                    continue
                other_opts = [child_options(o) for o in ch if o != c]
                for mine in enum(c, 0):
                    base = (sorted_edge(v, c),) + mine
                    for combo in itertools.product(*other_opts):
                        results.append(base + tuple(e for part in combo for e in part))
        cache[key] = results
        return results

    best_size = _best(up0[1], up1[1])[0]
    all_edge_sets: list[tuple[Edge, ...]] = []
    if up0[1][0] == best_size:
        all_edge_sets.extend(enum(1, 0))
    if up1[1] is not None and up1[1][0] == best_size:
        all_edge_sets.extend(enum(1, 1))
    assert len(all_edge_sets) == total.count
    return [Matching(es) for es in sorted(tuple(sorted(es)) for es in all_edge_sets)]


def _alpha_count(tree: Tree) -> CountResult:
    """Independence number and count of maximum independent sets."""
    order, _, children = _rooted(tree)
    inn: dict[int, tuple[int, int]] = {}
    out: dict[int, tuple[int, int]] = {}
    for v in reversed(order):
        in_size, in_cnt = 1, 1
        out_size, out_cnt = 0, 1
        for c in children[v]:
            in_size += out[c][0]
            in_cnt *= out[c][1]
            bs, bc = _best(inn[c], out[c])
            out_size += bs
            out_cnt *= bc
        inn[v] = (in_size, in_cnt)
        out[v] = (out_size, out_cnt)
    return CountResult(*_best(inn[1], out[1]))


def _forest_alpha(tree: Tree, vertices: set[int]) -> int:
    return sum(_alpha_count(c.tree).optimum for c in induced_components(tree, vertices))


def independence(tree: Tree) -> IndependenceResult:
    """Independence number, count of maximum independent sets, and the
    lexicographically smallest maximum independent set (greedy forcing in
    ascending label order)."""
    alpha, count = _alpha_count(tree)
    chosen: list[int] = []
    blocked: set[int] = set()
    for v in tree.vertices():
        if v in blocked:
            continue
        trial = blocked | {v} | set(tree.neighbors(v))
        rest = {w for w in tree.vertices() if w not in trial}
        if len(chosen) + 1 + _forest_alpha(tree, rest) == alpha:
            chosen.append(v)
            blocked = trial
    assert len(chosen) == alpha
    return IndependenceResult(alpha, count, frozenset(chosen))


def minimum_vertex_cover(tree: Tree) -> CoverResult:
    """Complement of a maximum independent set; counts coincide."""
    ind = independence(tree)
    witness = frozenset(tree.vertices()) - ind.witness
    return CoverResult(tree.n - ind.alpha, ind.count, witness)


def edmond_gallai(tree: Tree) -> frozenset[int]:
    """Vertices missed by some maximum matching: deleting them keeps the
    matching number unchanged."""
    nu = matching_count(tree).optimum
    out = set()
    for v in tree.vertices():
        forest = delete_vertex(tree, v)
        nu_v = sum(matching_count(c.tree).optimum for c in forest.components)
        if nu_v == nu:
            out.add(v)
    return frozenset(out)


def _support_of(tree: Tree) -> frozenset[int]:
    return linalg.support(linalg.null_space_basis(linalg.adjacency_matrix(tree)))


def _closed_neighborhood(tree: Tree, vertices: Iterable[int]) -> set[int]:
    out = set(vertices)
    for v in list(out):
        out.update(tree.neighbors(v))
    return out


def desaturate(tree: Tree, matching: Matching, v: int) -> Matching:
    """Turn a maximum matching of an S-tree into one that misses v.

    Walks an alternating path out of v: drop v's matched edge, step from the
    freed core vertex to its smallest supported neighbor (preferring an
    unsaturated one, which ends the walk), and repeat through that vertex's
    partner.  On a tree the walk is a simple path, so it terminates; the swap
    keeps the size, hence the result is again maximum.
    """
    _check_edges_in_tree(tree, matching)
    supp = _support_of(tree)
    if len(_closed_neighborhood(tree, supp)) != tree.n:
        raise NotSTreeError("the support's closed neighborhood does not cover the tree")
    if len(matching) != matching_count(tree).optimum:
        raise NotMaximumMatchingError(f"matching of size {len(matching)} is not maximum")
    if v not in supp:
        raise VertexNotSupportedError(f"vertex {v} is not supported")
    if not matching.saturates(v):
        raise VertexUnsaturatedError(f"vertex {v} is already unsaturated")
    partner = {}
    for a, b in matching.edges:
        partner[a] = b
        partner[b] = a
    saturated = matching.vertices
    swap: set[Edge] = set()
    visited = {v}
    cur = v
    while True:
        c = partner[cur]
        swap.add(sorted_edge(cur, c))
        cands = [w for w in tree.neighbors(c) if w in supp and w != cur]
        assert cands, "a core vertex of an S-tree has at least two supported neighbors"
        unsat = [w for w in cands if w not in saturated]
        nxt = min(unsat) if unsat else min(cands)
        assert nxt not in visited, "the alternating walk must be a simple path"
        visited.update({c, nxt})
        swap.add(sorted_edge(c, nxt))
        if nxt not in saturated:
            break
        cur = nxt
    result = Matching(matching.edges ^ swap)
    assert len(result) == len(matching) and not result.saturates(v)
    return result


def reroute_connection_edge(tree: Tree, decomposition, matching: Matching, e: tuple[int, int]) -> Matching:
    """Replace the connection edge e in a matching by edges inside its S-part.

    Walks from e's core endpoint through the part: exit immediately at any
    unsaturated neighbor, otherwise continue via the smallest supported
    saturated neighbor (never the vertex just visited) and its partner.  The
    result has the same size and uses strictly fewer connection edges.
    """
    e = sorted_edge(*e)
    if e not in decomposition.connection_edges:
        raise NotConnectionEdgeError(f"{{{e[0]},{e[1]}}} is not a connection edge")
    if e not in matching.edges:
        raise EdgeNotInMatchingError(f"{{{e[0]},{e[1]}}} is not in the matching")
    _check_edges_in_tree(tree, matching)
    core_end = e[0] if e[0] in decomposition.core else e[1]
    part = next(p for p in decomposition.s_parts if core_end in p.vertices)
    partner = {}
    for a, b in matching.edges:
        partner[a] = b
        partner[b] = a
    saturated = matching.vertices
    removed: set[Edge] = {e}
    added: set[Edge] = set()
    visited = {core_end}
    u = core_end
    prev = None
    while True:
        part_neighbors = [w for w in tree.neighbors(u) if w in part.vertices]
        unsat = [w for w in part_neighbors if w not in saturated]
        if unsat:
            added.add(sorted_edge(u, min(unsat)))
            break
        cands = [w for w in part_neighbors if w in part.supp and w != prev]
        assert cands, "a core vertex of an S-part has at least two supported neighbors"
        w = min(cands)
        nxt = partner[w]
        assert w not in visited and nxt not in visited, "the alternating walk must be a simple path"
        visited.update({w, nxt})
        added.add(sorted_edge(u, w))
        removed.add(sorted_edge(w, nxt))
        prev = w
        u = nxt
    result = Matching((matching.edges - removed) | added)
    assert len(result) == len(matching)
    conn = decomposition.connection_edges
    assert len(result.edges & conn) == len(matching.edges & conn) - 1
    return result


def _require_s_tree(tree: Tree, decomposition) -> None:
    if len(decomposition.supp) + len(decomposition.core) != tree.n:
        raise NotSTreeError("the support's closed neighborhood does not cover the tree")


def hall_check(tree: Tree, decomposition) -> Optional[frozenset[int]]:
    """Check |N(U) ∩ Supp| > |U| for every nonempty core subset U of an S-tree.

    Returns None when the strict Hall condition holds, otherwise the first
    violating subset in bitmask order.  Exhaustive, so the core must be small.
    """
    _require_s_tree(tree, decomposition)
    core = sorted(decomposition.core)
    if len(core) > 20:
        raise CoreTooLargeError(f"core of size {len(core)} exceeds the subset-scan guard of 20")
    supp = decomposition.supp
    for mask in range(1, 1 << len(core)):
        subset = [core[i] for i in range(len(core)) if mask >> i & 1]
        nb: set[int] = set()
        for u in subset:
            nb.update(tree.neighbors(u))
        if len(nb & supp) <= len(subset):
            return frozenset(subset)
    return None


def core_saturating_matching(tree: Tree, decomposition) -> Matching:
    """A matching pairing every core vertex of an S-tree with a supported
    neighbor, found by augmenting paths; its size equals the core size."""
    _require_s_tree(tree, decomposition)
    core = sorted(decomposition.core)
    if not core:
        raise EmptyCoreError("the core is empty")
    supp = decomposition.supp
    assigned: dict[int, int] = {}

    def assign(c: int, seen: set[int]) -> bool:
        for w in tree.neighbors(c):
            if w not in supp or w in seen:
                continue
            seen.add(w)
            if w not in assigned or assign(assigned[w], seen):
                assigned[w] = c
                return True
        return False

    for c in core:
        ok = assign(c, set())
        assert ok, "Hall's condition guarantees a core-saturating matching in an S-tree"
    result = Matching((c, w) for w, c in assigned.items())
    assert len(result) == len(core)
    return result


def domination_number_bruteforce(tree: Tree) -> int:
    """Exact domination number by branch and bound on the lowest undominated
    vertex; guarded to 24 vertices."""
    if tree.n > 24:
        raise TooLargeError(f"{tree.n} vertices exceed the domination guard of 24")
    n = tree.n
    closed = [0] * (n + 1)
    for v in tree.vertices():
        m = 1 << (v - 1)
        for w in tree.neighbors(v):
            m |= 1 << (w - 1)
        closed[v] = m
    full = (1 << n) - 1
    max_cover = max(closed[v].bit_count() for v in tree.vertices())

    def exists(k: int, dominated: int) -> bool:
        missing = full & ~dominated
        if missing == 0:
            return True
        if k == 0 or missing.bit_count() > k * max_cover:
            return False
        v = (missing & -missing).bit_length()
        return any(
            exists(k - 1, dominated | closed[w]) for w in sorted((v, *tree.neighbors(v)))
        )

    for k in range(1, n + 1):
        if exists(k, 0):
            return k
    raise AssertionError("unreachable: the full vertex set dominates")
