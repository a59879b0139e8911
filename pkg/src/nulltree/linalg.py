"""Exact linear algebra over the rationals for vertex-indexed vectors.

A vector is a tuple of Fractions whose i-th entry belongs to vertex i+1; a
matrix is a tuple of such row tuples.  Everything here is exact: no floats
enter at any point, so equality tests (span equality, canonical bases,
characteristic polynomials) are decisions, not approximations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyInputError, InvalidVertexError
from .tree import Tree

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vector(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def adjacency_matrix(tree: Tree) -> Matrix:
    """Symmetric 0/1 adjacency matrix, rows and columns in vertex order 1..n."""
    rows = []
    for u in tree.vertices():
        nb = set(tree.neighbors(u))
        rows.append(tuple(_ONE if v in nb else _ZERO for v in tree.vertices()))
    return tuple(rows)


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns, by exact Gaussian elimination."""
    m = [[Fraction(e) for e in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    if any(len(row) != ncols for row in m):
        raise ValueError("rows must have equal length")
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m), tuple(pivots)


def rank_nullity(matrix: Sequence[Sequence]) -> tuple[int, int]:
    """(rank, nullity) of a square matrix."""
    n = len(matrix)
    _, pivots = rref(matrix)
    return len(pivots), n - len(pivots)


def null_space_basis(matrix: Sequence[Sequence]) -> tuple[Vector, ...]:
    """The canonical basis of the null space.

    Build one vector per free column of the RREF, then reduce those vectors
    themselves to reduced echelon form.  The reduced echelon basis of a
    subspace is unique, so equal null spaces always produce identical output,
    entry for entry.
    """
    n = len(matrix)
    if n == 0:
        return ()
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(len(matrix[0])) if c not in pivot_set]
    vecs = []
    for f in free:
        v = [_ZERO] * len(matrix[0])
        v[f] = _ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        vecs.append(v)
    if not vecs:
        return ()
    canon, _ = rref(vecs)
    return tuple(row for row in canon if any(e != 0 for e in row))


def matvec(matrix: Sequence[Sequence], x: Sequence) -> Vector:
    return tuple(
        sum((Fraction(a) * Fraction(b) for a, b in zip(row, x)), _ZERO) for row in matrix
    )


def dot(x: Sequence, y: Sequence) -> Fraction:
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(x, y)), _ZERO)


def is_zero(x: Sequence) -> bool:
    return all(Fraction(e) == 0 for e in x)


def support(vectors: Iterable[Sequence]) -> frozenset[int]:
    """Vertices (1-based positions) carrying a nonzero entry in some vector."""
    out: set[int] = set()
    for x in vectors:
        out.update(i + 1 for i, e in enumerate(x) if Fraction(e) != 0)
    return frozenset(out)


def combine_full_support(vectors: Sequence[Sequence]) -> Vector:
    """One vector in the span of the inputs supported wherever any input is.

    The accumulator is shrunk by its largest absolute entry and the incoming
    vector blown up by twice the reciprocal of its smallest nonzero absolute
    entry, so incoming entries always dominate and no support cancels:
    support(result) is exactly the union of the input supports.
    """
    xs = [vector(x) for x in vectors]
    if not xs:
        raise EmptyInputError("need at least one vector")
    length = len(xs[0])
    if any(len(x) != length for x in xs):
        raise ValueError("vectors must have equal length")
    z = xs[0]
    for x in xs[1:]:
        alpha = max((abs(e) for e in z), default=_ZERO)
        if alpha == 0:
            alpha = _ONE
        nonzero = [abs(e) for e in x if e != 0]
        beta = min(nonzero) / 2 if nonzero else _ONE
        z = tuple(e / alpha + f / beta for e, f in zip(z, x))
    return z


def weight(tree: Tree, x: Sequence, u: int) -> Fraction:
    """Sum of x over the neighbors of u; zero for every u exactly when x is a null vector."""
    tree.check_vertex(u)
    if len(x) != tree.n:
        raise ValueError(f"vector length {len(x)} does not match {tree.n} vertices")
    return sum((Fraction(x[v - 1]) for v in tree.neighbors(u)), _ZERO)


def restrict(x: Sequence, subset: Iterable[int]) -> Vector:
    """Entries of x at the subset's vertices, in ascending vertex order.

    Position i of the result belongs to the i-th smallest member, matching
    the local relabeling used for induced components.
    """
    vs = sorted(set(subset))
    for v in vs:
        if not 1 <= v <= len(x):
            raise InvalidVertexError(f"vertex {v} not in 1..{len(x)}")
    return tuple(Fraction(x[v - 1]) for v in vs)


def lift(x: Sequence, tree: Tree, subset: Iterable[int]) -> Vector:
    """Spread a local vector back onto the full vertex set, zero elsewhere."""
    vs = sorted(set(subset))
    if len(vs) != len(x):
        raise ValueError(f"vector length {len(x)} does not match subset size {len(vs)}")
    for v in vs:
        tree.check_vertex(v)
    out = [_ZERO] * tree.n
    for e, v in zip(x, vs):
        out[v - 1] = Fraction(e)
    return tuple(out)


def span_canonical(vectors: Iterable[Sequence]) -> tuple[Vector, ...]:
    """The unique reduced-echelon basis of the span of the given vectors."""
    vecs = [vector(x) for x in vectors]
    vecs = [x for x in vecs if any(e != 0 for e in x)]
    if not vecs:
        return ()
    reduced, pivots = rref(vecs)
    return tuple(reduced[i] for i in range(len(pivots)))


def same_span(a: Iterable[Sequence], b: Iterable[Sequence]) -> bool:
    return span_canonical(a) == span_canonical(b)


def in_span(vectors: Iterable[Sequence], x: Sequence) -> bool:
    base = span_canonical(vectors)
    return span_canonical(list(base) + [vector(x)]) == base


def _as_int(e) -> int:
    q = Fraction(e)
    if q.denominator != 1:
        raise ValueError(f"matrix entry {q} is not an integer")
    return q.numerator


def characteristic_polynomial(matrix: Sequence[Sequence]) -> tuple[int, ...]:
    """Coefficients c0..cn of det(xI - M) for an integer matrix.

    Uses the Faddeev-LeVerrier recurrence over plain integers; the division
    by k at step k is exact for integer matrices and is asserted so.
    """
    n = len(matrix)
    a = [[_as_int(e) for e in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A @ M_{k-1} + c_{n-k+1} I
        nxt = [
            [sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)
        ]
        add = coeffs[n - k + 1]
        for i in range(n):
            nxt[i][i] += add
        mk = nxt
        tr = sum(a[i][j] * mk[j][i] for i in range(n) for j in range(n))
        q, r = divmod(tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact on integer input"
        coeffs[n - k] = -q
    return tuple(coeffs)


def format_rational(q: Fraction) -> str:
    """Lowest-terms p/q string; the denominator is omitted when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_vector(x: Sequence) -> str:
    """Space-separated rational entries in vertex order."""
    return " ".join(format_rational(e) for e in x)
