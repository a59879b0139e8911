"""The exhaustive oracles agree with the polynomial routines on small trees."""

import pytest
from hypothesis import given, settings, strategies as st

from nulltree.errors import TooLargeError
from nulltree.linalg import adjacency_matrix, rank_nullity
from nulltree.matching import (
    domination_number_bruteforce,
    enumerate_maximum_matchings,
    independence,
    matching_count,
    minimum_vertex_cover,
)
from nulltree.oracle import (
    OracleBound,
    brute_dominating_sets,
    brute_independent_sets,
    brute_matchings,
    brute_nullity,
    brute_vertex_covers,
)
from nulltree.tree import Tree, random_tree

small_trees = st.builds(random_tree, st.integers(1, 10), st.integers(0, 2**32 - 1))


def path(n):
    return Tree(n, [(i, i + 1) for i in range(1, n)])


def test_brute_matchings_known_values():
    nu, count, maxima = brute_matchings(path(4))
    assert (nu, count) == (2, 1)
    assert maxima == [frozenset({(1, 2), (3, 4)})]
    nu, count, maxima = brute_matchings(Tree(4, [(1, 2), (1, 3), (1, 4)]))
    assert (nu, count) == (1, 3)


@given(small_trees)
def test_brute_matchings_agree_with_dp(t):
    nu, count, maxima = brute_matchings(t)
    dp = matching_count(t)
    assert (nu, count) == dp
    enumerated = {m.edges for m in enumerate_maximum_matchings(t)}
    assert set(maxima) == enumerated


@given(small_trees)
def test_brute_independent_sets_agree_with_dp(t):
    alpha, count = brute_independent_sets(t)
    ind = independence(t)
    assert alpha == ind.alpha and count == ind.count


@given(st.builds(random_tree, st.integers(1, 9), st.integers(0, 2**32 - 1)))
def test_brute_vertex_covers_agree_with_dp(t):
    tau, count = brute_vertex_covers(t)
    cov = minimum_vertex_cover(t)
    assert tau == cov.tau and count == cov.count


@given(small_trees)
def test_brute_dominating_sets_agree_with_branch_and_bound(t):
    gamma, count = brute_dominating_sets(t)
    assert gamma == domination_number_bruteforce(t)
    assert count >= 1


@settings(max_examples=20)
@given(st.builds(random_tree, st.integers(1, 8), st.integers(0, 2**32 - 1)))
def test_brute_nullity_agrees_with_elimination(t):
    assert brute_nullity(t) == rank_nullity(adjacency_matrix(t))[1]


def test_oracle_bound_guard():
    t = path(15)
    for op in (brute_matchings, brute_independent_sets, brute_vertex_covers,
               brute_dominating_sets, brute_nullity):
        with pytest.raises(TooLargeError):
            op(t)
    nu, _, _ = brute_matchings(t, OracleBound(max_n=15))
    assert nu == 7
