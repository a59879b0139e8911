"""Exact rational kernel: elimination, null bases, combination, char poly."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nulltree.errors import EmptyInputError, InvalidVertexError
from nulltree.linalg import (
    adjacency_matrix,
    characteristic_polynomial,
    combine_full_support,
    dot,
    format_rational,
    format_vector,
    in_span,
    is_zero,
    lift,
    matvec,
    null_space_basis,
    rank_nullity,
    restrict,
    rref,
    same_span,
    span_canonical,
    support,
    weight,
)
from nulltree.tree import Tree, random_tree

trees = st.builds(random_tree, st.integers(1, 12), st.integers(0, 2**32 - 1))


def frac(entries):
    return tuple(Fraction(e) for e in entries)


def test_adjacency_matrix():
    a = adjacency_matrix(Tree(3, [(1, 2), (2, 3)]))
    assert a == (frac((0, 1, 0)), frac((1, 0, 1)), frac((0, 1, 0)))


def test_rref_known_case():
    reduced, pivots = rref([(1, 2, 3), (2, 4, 7)])
    assert pivots == (0, 2)
    assert reduced == (frac((1, 2, 0)), frac((0, 0, 1)))
    again, _ = rref(reduced)
    assert again == reduced


def test_null_space_basis_of_broom(broom6):
    basis = null_space_basis(adjacency_matrix(broom6))
    assert basis == (frac((0, 1, 0, -1, 0, 0)), frac((0, 0, 1, -1, 0, 0)))
    assert support(basis) == {2, 3, 4}


@given(trees)
def test_null_basis_vectors_lie_in_kernel(t):
    a = adjacency_matrix(t)
    basis = null_space_basis(a)
    rank, nullity = rank_nullity(a)
    assert rank + nullity == t.n
    assert len(basis) == nullity
    for x in basis:
        assert is_zero(matvec(a, x))
        for u in t.vertices():
            assert weight(t, x, u) == 0


@given(trees, st.randoms(use_true_random=False))
def test_span_canonical_ignores_presentation(t, rng):
    basis = list(null_space_basis(adjacency_matrix(t)))
    if not basis:
        return
    mixed = [tuple(3 * e for e in x) for x in basis]
    rng.shuffle(mixed)
    mixed[0] = tuple(a + b for a, b in zip(mixed[0], mixed[-1]))
    assert same_span(mixed, basis)
    assert span_canonical(mixed) == span_canonical(basis)


def test_combine_full_support_frozen_example():
    z = combine_full_support([(0, 1, 0, -1, 0, 0), (0, 0, 1, -1, 0, 0)])
    assert z == frac((0, 1, 2, -3, 0, 0))


def test_combine_full_support_edge_cases():
    with pytest.raises(EmptyInputError):
        combine_full_support([])
    assert combine_full_support([(0, 0), (1, 0)]) == frac((2, 0))
    with pytest.raises(ValueError):
        combine_full_support([(1,), (1, 2)])


small_vectors = st.lists(
    st.tuples(*[st.integers(-4, 4)] * 5).map(frac), min_size=1, max_size=4
)


@given(small_vectors)
def test_combine_full_support_contract(vectors):
    z = combine_full_support(vectors)
    assert support([z]) == support(vectors)
    assert in_span(vectors, z)


def test_restrict_and_lift(composite18):
    x = tuple(Fraction(2 * i) for i in range(1, 19))
    assert restrict(x, range(4, 9)) == frac((8, 10, 12, 14, 16))
    with pytest.raises(InvalidVertexError):
        restrict(x, [19])
    lifted = lift((1, 2, 3, 4), composite18, [9, 10, 11, 12])
    assert lifted == frac((0,) * 8 + (1, 2, 3, 4) + (0,) * 6)
    assert restrict(lifted, [9, 10, 11, 12]) == frac((1, 2, 3, 4))
    with pytest.raises(ValueError):
        lift((1, 2), composite18, [1, 2, 3])


@given(trees)
def test_lift_of_restrict_on_full_set_is_identity(t):
    x = tuple(Fraction(i, 3) for i in range(t.n))
    assert lift(restrict(x, t.vertices()), t, t.vertices()) == x


def _matchings_by_size(t):
    """Brute-force k-matching counts, the coefficient oracle for char polys."""
    counts = [0] * (t.n // 2 + 1)
    for k in range(t.n // 2 + 1):
        for combo in itertools.combinations(t.edges, k):
            used = [v for e in combo for v in e]
            if len(used) == len(set(used)):
                counts[k] += 1
    return counts


def test_characteristic_polynomial_small_cases():
    assert characteristic_polynomial(adjacency_matrix(Tree(1, []))) == (0, 1)
    assert characteristic_polynomial(adjacency_matrix(Tree(2, [(1, 2)]))) == (-1, 0, 1)
    assert characteristic_polynomial(
        adjacency_matrix(Tree(3, [(1, 2), (2, 3)]))
    ) == (0, -2, 0, 1)


def test_characteristic_polynomial_of_fixtures(broom6, double_broom8):
    assert characteristic_polynomial(adjacency_matrix(broom6)) == (0, 0, 3, 0, -5, 0, 1)
    assert characteristic_polynomial(adjacency_matrix(double_broom8)) == (
        0, 0, 0, 0, 11, 0, -7, 0, 1,
    )


@given(st.builds(random_tree, st.integers(1, 8), st.integers(0, 2**32 - 1)))
def test_characteristic_polynomial_counts_matchings(t):
    coeffs = characteristic_polynomial(adjacency_matrix(t))
    counts = _matchings_by_size(t)
    for i, c in enumerate(coeffs):
        if (t.n - i) % 2 == 1:
            assert c == 0
        else:
            k = (t.n - i) // 2
            assert c == (-1) ** k * counts[k]


def test_characteristic_polynomial_rejects_non_integers():
    with pytest.raises(ValueError):
        characteristic_polynomial([[Fraction(1, 2)]])


def test_dot_and_matvec():
    assert dot((1, 2), (3, 4)) == 11
    with pytest.raises(ValueError):
        dot((1,), (1, 2))
    assert matvec([(0, 1), (1, 0)], (5, 7)) == frac((7, 5))


def test_formatting():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-5)) == "-5"
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert format_vector((Fraction(0), Fraction(1, 2))) == "0 1/2"
