"""Labeled trees on vertices 1..n.

Parsing and serialization of the plain edge-list format, seeded random
generation via Prüfer sequences, vertex/edge surgery (pendant attachment,
vertex deletion, connection-edge rewiring) and DOT export.  Trees are
read-only after construction; every operation returns a new object.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EndpointOutsidePartError,
    InvalidVertexError,
    LabelClashError,
    NotATreeError,
    NotConnectionEdgeError,
    ParseError,
)

Edge = tuple[int, int]


def sorted_edge(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max) form."""
    return (u, v) if u < v else (v, u)


class Tree:
    """A labeled tree on vertices 1..n, validated at construction.

    Edges are stored sorted, each as a (u, v) tuple with u < v, and adjacency
    lists are sorted ascending, so iteration order is deterministic
    everywhere.  Read-only after construction.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if n < 1:
            raise NotATreeError(f"vertex count must be at least 1, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise NotATreeError(f"edge {{{u},{v}}} uses a label outside 1..{n}")
            e = sorted_edge(u, v)
            if e in seen:
                raise NotATreeError(f"duplicate edge {{{e[0]},{e[1]}}}")
            seen.add(e)
        if len(seen) != n - 1:
            raise NotATreeError(f"a tree on {n} vertices has {n - 1} edges, got {len(seen)}")
        adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        # n-1 edges + connectivity is equivalent to being a tree.
        reached = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
        if len(reached) != n:
            raise NotATreeError("edge list is not connected")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._adj = {v: tuple(sorted(nb)) for v, nb in adj.items()}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise InvalidVertexError(f"vertex {v} not in 1..{self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Component:
    """An induced subtree relabeled to 1..k, plus the map back to original labels.

    Local label i corresponds to ``to_original[i - 1]``; local labels follow the
    ascending order of the original ones.
    """

    tree: Tree
    to_original: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.to_original)

    def original(self, local: int) -> int:
        self.tree.check_vertex(local)
        return self.to_original[local - 1]

    def local(self, original: int) -> int:
        try:
            return self.to_original.index(original) + 1
        except ValueError:
            raise InvalidVertexError(f"vertex {original} is not in this component") from None

    def original_edges(self) -> tuple[Edge, ...]:
        return tuple(
            sorted(sorted_edge(self.original(a), self.original(b)) for a, b in self.tree.edges)
        )


@dataclass(frozen=True)
class Forest:
    """A tuple of components, ordered by their smallest original label."""

    components: tuple[Component, ...]

    @property
    def n(self) -> int:
        return sum(c.tree.n for c in self.components)


def parse_tree(text: str) -> Tree:
    """Parse the edge-list format: first data line is n, then one "u v" line per edge.

    Blank lines and lines starting with '#' are ignored.
    """
    data = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in data if ln and not ln.startswith("#")]
    if not data:
        raise ParseError("no data lines in input")
    try:
        n = int(data[0])
    except ValueError:
        raise ParseError(f"first data line must be the vertex count, got {data[0]!r}") from None
    edges = []
    for ln in data[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected an edge line 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex label in {ln!r}") from None
    return Tree(n, edges)


def format_edge_list(tree: Tree) -> str:
    """Serialize a tree in the same format parse_tree reads, edges sorted."""
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def decode_prufer(n: int, seq: Sequence[int]) -> list[Edge]:
    """Decode a Prüfer sequence of length n-2 into the edge list of its tree."""
    if n < 2:
        raise NotATreeError("Prüfer decoding needs at least 2 vertices")
    if len(seq) != n - 2:
        raise NotATreeError(f"sequence length must be {n - 2}, got {len(seq)}")
    degree = [1] * (n + 1)
    for v in seq:
        if not 1 <= v <= n:
            raise InvalidVertexError(f"sequence entry {v} not in 1..{n}")
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append(sorted_edge(leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append(sorted_edge(heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, seed: int) -> Tree:
    """Uniformly random labeled tree on 1..n, reproducible for a fixed (n, seed)."""
    if n < 1:
        raise NotATreeError(f"vertex count must be at least 1, got {n}")
    if n == 1:
        return Tree(1, [])
    if n == 2:
        return Tree(2, [(1, 2)])
    rng = random.Random(seed)
    seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    return Tree(n, decode_prufer(n, seq))


def branch(tree: Tree, u: int, v: int) -> frozenset[int]:
    """Vertices whose path to u passes through v: the v-side branch seen from u."""
    tree.check_vertex(u)
    tree.check_vertex(v)
    if u == v:
        raise InvalidVertexError("branch endpoints must differ")
    parent = {u: 0}
    order = [u]
    for x in order:
        for y in tree.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
    out: set[int] = set()
    for x in order:  # BFS order puts parents before children
        if x == v or parent[x] in out:
            out.add(x)
    return frozenset(out)


def attach_pendant(tree: Tree, c: int, new_label: int) -> Tree:
    """Attach a new leaf with label n+1 to vertex c."""
    tree.check_vertex(c)
    if new_label != tree.n + 1:
        raise LabelClashError(f"new label must be {tree.n + 1} to keep labels contiguous, got {new_label}")
    return Tree(tree.n + 1, list(tree.edges) + [(c, new_label)])


def induced_components(tree: Tree, vertices: Iterable[int]) -> list[Component]:
    """Connected components of the induced subgraph, each relabeled to 1..k.

    Components are returned ordered by smallest original label, and each
    component's local labels follow the ascending order of its original ones.
    """
    vs = set(vertices)
    for v in vs:
        tree.check_vertex(v)
    seen: set[int] = set()
    out = []
    for start in sorted(vs):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        for x in comp:
            for y in tree.neighbors(x):
                if y in vs and y not in seen:
                    seen.add(y)
                    comp.append(y)
        orig = tuple(sorted(comp))
        local = {o: i + 1 for i, o in enumerate(orig)}
        comp_set = set(orig)
        edges = [
            (local[a], local[b]) for a, b in tree.edges if a in comp_set and b in comp_set
        ]
        out.append(Component(Tree(len(orig), edges), orig))
    return out


def delete_vertex(tree: Tree, v: int) -> Forest:
    """The forest obtained by deleting v, components relabeled to 1..k each."""
    tree.check_vertex(v)
    rest = [x for x in tree.vertices() if x != v]
    return Forest(tuple(induced_components(tree, rest)))


def rewire(tree: Tree, e: tuple[int, int], u: int, v: int, decomposition) -> Tree:
    """Replace connection edge e with {u, v}.

    e joins a core vertex of some S-part to a vertex of some N-part; the
    replacement must reconnect the same two parts, with u in that S-part's
    core and v anywhere in that N-part.  The null space of the adjacency
    matrix is unchanged by this surgery.
    """
    e = sorted_edge(*e)
    if e not in decomposition.connection_edges:
        raise NotConnectionEdgeError(f"{{{e[0]},{e[1]}}} is not a connection edge")
    core_end = e[0] if e[0] in decomposition.core else e[1]
    n_end = e[1] if core_end == e[0] else e[0]
    s_part = next(p for p in decomposition.s_parts if core_end in p.vertices)
    n_part = next(p for p in decomposition.n_parts if n_end in p.vertices)
    if u not in s_part.core:
        raise EndpointOutsidePartError(
            f"vertex {u} is not in the core of the S-part touched by {{{e[0]},{e[1]}}}"
        )
    if v not in n_part.vertices:
        raise EndpointOutsidePartError(
            f"vertex {v} is not in the N-part touched by {{{e[0]},{e[1]}}}"
        )
    new_edges = [x for x in tree.edges if x != e]
    new_edges.append(sorted_edge(u, v))
    return Tree(tree.n, new_edges)


def to_dot(tree: Tree, decomposition=None) -> str:
    """Render as Graphviz DOT, optionally decorated with decomposition classes.

    Output is byte-stable: vertices ascending, edges lexicographic.  With a
    decomposition, supported vertices are filled, core vertices carry
    class=core, N-forest vertices class=nvert, and connection edges are
    dashed.
    """
    lines = ["graph {"]
    if decomposition is None:
        lines.extend(f"  {v};" for v in tree.vertices())
        lines.extend(f"  {u} -- {v};" for u, v in tree.edges)
    else:
        d = decomposition
        for v in tree.vertices():
            if v in d.supp:
                lines.append(f"  {v} [class=supp, style=filled];")
            elif v in d.core:
                lines.append(f"  {v} [class=core];")
            else:
                lines.append(f"  {v} [class=nvert];")
        for u, v in tree.edges:
            if (u, v) in d.connection_edges:
                lines.append(f"  {u} -- {v} [style=dashed];")
            else:
                lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
