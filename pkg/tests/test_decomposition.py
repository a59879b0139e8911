"""Decomposition structure, formulas, verification checks, classical claims."""

import pytest
from hypothesis import given, settings, strategies as st

from nulltree.decomposition import (
    VerifyConfig,
    decompose,
    formulas,
    is_n_tree,
    is_s_tree,
    neumaier_counterexamples,
    verify,
)
from nulltree.linalg import adjacency_matrix, rank_nullity
from nulltree.matching import independence, matching_count
from nulltree.tree import Tree, delete_vertex, random_tree

trees = st.builds(random_tree, st.integers(1, 12), st.integers(0, 2**32 - 1))


def path(n):
    return Tree(n, [(i, i + 1) for i in range(1, n)])


def test_classify_small_trees():
    assert is_s_tree(Tree(1, []))
    assert not is_s_tree(path(2)) and is_n_tree(path(2))
    assert is_s_tree(path(3)) and not is_n_tree(path(3))
    assert is_n_tree(path(4)) and not is_s_tree(path(4))


def test_decompose_perfect_matching_tree():
    d = decompose(path(4))
    assert d.supp == frozenset() and d.core == frozenset()
    assert d.s_parts == () and len(d.n_parts) == 1
    assert d.connection_edges == frozenset()
    assert d.nullity == 0
    f = formulas(path(4), d)
    assert f == (2, 2, 1, 0)


def test_decompose_single_vertex():
    t = Tree(1, [])
    d = decompose(t)
    assert d.supp == {1} and d.core == frozenset()
    assert len(d.s_parts) == 1 and not d.n_parts
    assert formulas(t, d) == (0, 1, 1, 1)


def test_decompose_broom(broom6):
    d = decompose(broom6)
    assert d.supp == {2, 3, 4} and d.core == {1}
    part = d.s_parts[0]
    assert part.supp == {2, 3, 4} and part.core == {1}
    assert part.tree.n == 4 and part.to_original == (1, 2, 3, 4)
    assert [sorted(p.vertices) for p in d.n_parts] == [[5, 6]]
    assert d.connection_edges == {(1, 5)}
    assert d.n_forest_vertices == {5, 6}
    assert formulas(broom6, d) == (2, 4, 3, 2)


def test_decomposition_json_shape(broom6):
    payload = decompose(broom6).to_json_dict()
    assert payload["supp"] == [2, 3, 4]
    assert payload["core"] == [1]
    assert payload["s_parts"][0]["edges"] == [[1, 2], [1, 3], [1, 4]]
    assert payload["n_parts"][0]["vertices"] == [5, 6]
    assert payload["connection_edges"] == [[1, 5]]
    assert payload["nullity"] == 2
    assert payload["null_basis"] == ["0 1 0 -1 0 0", "0 0 1 -1 0 0"]


@given(trees)
def test_parts_partition_vertices(t):
    d = decompose(t)
    cells = [p.vertices for p in d.s_parts] + [p.vertices for p in d.n_parts]
    assert sum(len(c) for c in cells) == t.n
    assert frozenset().union(*cells) == frozenset(t.vertices())
    for u, v in d.connection_edges:
        assert (u in d.core) != (v in d.core)
        assert (u in d.n_forest_vertices) != (v in d.n_forest_vertices)
    # support never touches support (independence)
    for u, v in t.edges:
        assert not (u in d.supp and v in d.supp)


@given(trees)
def test_formulas_agree_with_dynamic_programs(t):
    d = decompose(t)
    f = formulas(t, d)
    dp = matching_count(t)
    assert f.nu == dp.optimum
    assert f.m == dp.count
    assert f.alpha == independence(t).alpha
    assert f.nullity == rank_nullity(adjacency_matrix(t))[1] == d.nullity


@settings(max_examples=25)
@given(trees)
def test_verify_passes_on_random_trees(t):
    report = verify(t)
    assert report.passed, report.failed_checks()


def test_verify_report_shape(broom6):
    report = verify(broom6)
    names = [c.name for c in report.checks]
    assert names == [
        "decomposition-is-partition",
        "support-equals-edmond-gallai",
        "s-components-are-s-trees",
        "n-components-are-n-trees",
        "nullity-is-additive",
        "core-structure",
        "rank-is-twice-matching-number",
        "connection-edges-avoid-maximum-matchings",
        "formulas-match-oracles",
        "charpoly-matches-matchings",
        "domination-at-most-independence",
        "rewiring-preserves-null-space",
        "pendant-on-core-stays-s-tree",
        "classical-zero-vertex-claims",
    ]
    assert report.passed and report.failed_checks() == ()
    payload = report.to_json_dict()
    assert payload["passed"] is True
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_verify_skips_oracle_checks_above_bound(domination16):
    report = verify(domination16, VerifyConfig(oracle_bound=14))
    by_name = {c.name: c for c in report.checks}
    assert by_name["domination-at-most-independence"].status == "skip"
    assert by_name["formulas-match-oracles"].status == "pass"
    assert "skipped" in by_name["formulas-match-oracles"].details
    assert report.passed  # skips do not fail the report


def test_neumaier_claims_fail_off_s_trees(broom6):
    report = neumaier_counterexamples(broom6)
    assert report["nullity"] == 2 and report["is_s_tree"] is False
    assert report["essential"] == [2, 3, 4]
    assert report["special"] == [1]
    assert report["inessential"] == [5, 6]
    by_vertex = {d["vertex"]: d for d in report["deletions"]}
    assert by_vertex[6]["nullity_after"] == 3 and by_vertex[6]["delta"] == 1
    assert all(abs(d["delta"]) == 1 for d in report["deletions"])
    claims = report["claims"]
    assert claims["deleting_inessential_preserves_nullity"]["holds"] is False
    assert claims["deleting_inessential_preserves_nullity"]["counterexamples"] == [5, 6]
    assert claims["special_equals_unavoidable"]["holds"] is False
    assert claims["every_edge_touches_special"]["holds"] is False
    assert claims["special_count_is_matching_number"]["holds"] is False


def test_neumaier_claims_hold_on_s_trees(double_broom8):
    report = neumaier_counterexamples(double_broom8)
    assert report["is_s_tree"] is True
    assert report["inessential"] == []
    claims = report["claims"]
    assert all(v["holds"] for v in claims.values())


@given(trees)
def test_deleting_any_vertex_moves_nullity_by_one(t):
    a = adjacency_matrix(t)
    nullity = rank_nullity(a)[1]
    for v in range(1, t.n + 1):
        forest = delete_vertex(t, v)
        after = sum(
            rank_nullity(adjacency_matrix(c.tree))[1] for c in forest.components
        )
        assert abs(after - nullity) == 1
