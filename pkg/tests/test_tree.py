"""Tree construction, parsing, generation and surgery."""

import pytest
from hypothesis import given, strategies as st

from nulltree.errors import (
    EndpointOutsidePartError,
    InvalidVertexError,
    LabelClashError,
    NotATreeError,
    NotConnectionEdgeError,
    ParseError,
)
from nulltree.decomposition import decompose
from nulltree.tree import (
    Tree,
    attach_pendant,
    branch,
    decode_prufer,
    delete_vertex,
    format_edge_list,
    induced_components,
    parse_tree,
    random_tree,
    rewire,
    to_dot,
)

trees = st.builds(random_tree, st.integers(1, 12), st.integers(0, 2**32 - 1))


def test_single_vertex():
    t = Tree(1, [])
    assert t.n == 1 and t.edges == ()
    assert t.neighbors(1) == ()


def test_validation_rejects_bad_input():
    with pytest.raises(NotATreeError):
        Tree(0, [])
    with pytest.raises(NotATreeError):
        Tree(2, [])  # wrong edge count
    with pytest.raises(NotATreeError):
        Tree(2, [(1, 1)])  # self loop
    with pytest.raises(NotATreeError):
        Tree(3, [(1, 2), (2, 1)])  # duplicate edge
    with pytest.raises(NotATreeError):
        Tree(3, [(1, 2), (3, 4)])  # label out of range
    with pytest.raises(NotATreeError):
        Tree(4, [(1, 2), (1, 2), (3, 4)])


def test_edges_and_neighbors_are_sorted():
    t = Tree(4, [(3, 1), (4, 1), (2, 1)])
    assert t.edges == ((1, 2), (1, 3), (1, 4))
    assert t.neighbors(1) == (2, 3, 4)
    assert t.degree(1) == 3 and t.degree(2) == 1
    assert t.has_edge(3, 1) and not t.has_edge(2, 3)
    with pytest.raises(InvalidVertexError):
        t.neighbors(5)


def test_parse_tree_and_errors():
    t = parse_tree("# comment\n3\n1 2\n\n2 3\n")
    assert t.edges == ((1, 2), (2, 3))
    with pytest.raises(ParseError):
        parse_tree("")
    with pytest.raises(ParseError):
        parse_tree("# only a comment\n")
    with pytest.raises(ParseError):
        parse_tree("x\n1 2\n")
    with pytest.raises(ParseError):
        parse_tree("3\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_tree("3\n1 a\n")


@given(trees)
def test_parse_round_trip(t):
    assert parse_tree(format_edge_list(t)) == t


def test_decode_prufer():
    assert sorted(decode_prufer(4, [2, 2])) == [(1, 2), (2, 3), (2, 4)]
    with pytest.raises(NotATreeError):
        decode_prufer(4, [2])
    with pytest.raises(InvalidVertexError):
        decode_prufer(4, [5, 1])


def test_random_tree_is_deterministic():
    assert random_tree(9, 42) == random_tree(9, 42)
    assert random_tree(1, 0).n == 1
    assert random_tree(2, 0).edges == ((1, 2),)


@given(trees)
def test_random_tree_edge_count(t):
    assert len(t.edges) == t.n - 1


@given(st.builds(random_tree, st.integers(2, 12), st.integers(0, 2**32 - 1)), st.data())
def test_branch_partitions_adjacent_pairs(t, data):
    u, v = data.draw(st.sampled_from(t.edges))
    left = branch(t, u, v)
    right = branch(t, v, u)
    assert left | right == set(t.vertices())
    assert not (left & right)
    assert v in left and u in right


def test_branch_on_broom(broom6):
    assert branch(broom6, 1, 5) == {5, 6}
    assert branch(broom6, 6, 5) == {1, 2, 3, 4, 5}
    with pytest.raises(InvalidVertexError):
        branch(broom6, 3, 3)


def test_attach_pendant():
    t = Tree(3, [(1, 2), (2, 3)])
    grown = attach_pendant(t, 2, 4)
    assert grown.edges == ((1, 2), (2, 3), (2, 4))
    with pytest.raises(LabelClashError):
        attach_pendant(t, 2, 3)
    with pytest.raises(LabelClashError):
        attach_pendant(t, 2, 5)


def test_delete_vertex(broom6):
    forest = delete_vertex(broom6, 1)
    assert [sorted(c.vertices) for c in forest.components] == [[2], [3], [4], [5, 6]]
    assert forest.n == 5
    last = forest.components[-1]
    assert last.tree.edges == ((1, 2),)
    assert last.original(1) == 5 and last.local(6) == 2
    assert delete_vertex(Tree(1, []), 1).components == ()


def test_induced_components_relabeling(composite18):
    comps = induced_components(composite18, {4, 5, 6, 7, 8})
    assert len(comps) == 1
    comp = comps[0]
    assert comp.to_original == (4, 5, 6, 7, 8)
    # original path 6-4-7-5-8 becomes 3-1-4-2-5 locally
    assert comp.tree.edges == ((1, 3), (1, 4), (2, 4), (2, 5))
    assert comp.original_edges() == ((4, 6), (4, 7), (5, 7), (5, 8))
    with pytest.raises(InvalidVertexError):
        comp.local(13)


def test_rewire_preconditions(composite18):
    d = decompose(composite18)
    with pytest.raises(NotConnectionEdgeError):
        rewire(composite18, (1, 2), 1, 13, d)
    with pytest.raises(EndpointOutsidePartError):
        rewire(composite18, (4, 14), 9, 14, d)  # 9 is core of another part
    with pytest.raises(EndpointOutsidePartError):
        rewire(composite18, (4, 14), 4, 16, d)  # 16 is in the other N-part


def test_rewire_round_trip(composite18):
    d = decompose(composite18)
    moved = rewire(composite18, (4, 14), 5, 14, d)
    assert moved.has_edge(5, 14) and not moved.has_edge(4, 14)
    d2 = decompose(moved)
    assert d2.supp == d.supp and d2.core == d.core
    assert (5, 14) in d2.connection_edges
    back = rewire(moved, (5, 14), 4, 14, d2)
    assert back == composite18


def test_to_dot_plain():
    t = Tree(3, [(1, 2), (2, 3)])
    assert to_dot(t) == "graph {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n"


def test_to_dot_decorated(broom6):
    out = to_dot(broom6, decompose(broom6))
    assert out == (
        "graph {\n"
        "  1 [class=core];\n"
        "  2 [class=supp, style=filled];\n"
        "  3 [class=supp, style=filled];\n"
        "  4 [class=supp, style=filled];\n"
        "  5 [class=nvert];\n"
        "  6 [class=nvert];\n"
        "  1 -- 2;\n"
        "  1 -- 3;\n"
        "  1 -- 4;\n"
        "  1 -- 5 [style=dashed];\n"
        "  5 -- 6;\n"
        "}\n"
    )
