import pytest
from hypothesis import given

from pathcover.errors import ParseError, SelfLoop, TwoCycle, VertexOutOfRange
from pathcover.graph import (
    Digraph,
    Graph,
    directed_cycle,
    directed_path,
    from_edge_list,
    induced_subdigraph,
    is_directed_path,
    is_induced_path,
    is_weakly_connected,
    r_value,
    to_edge_list,
    underlying,
)

from .conftest import digraphs


def tournament(n):
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_parse_semicolons():
    d = from_edge_list("3; 0 1; 1 2")
    assert d.order == 3 and d.size == 2


def test_parse_comments_and_whitespace():
    d = from_edge_list("# header\n4\n0 1\n  # skipped\n2 3\n")
    assert sorted(d.arcs) == [(0, 1), (2, 3)]


@pytest.mark.parametrize("text, exc", [
    ("2; 0 1; 1 0", TwoCycle),
    ("1; 0 0", SelfLoop),
    ("2; 0 5", VertexOutOfRange),
    ("3; 0", ParseError),
    ("", ParseError),
    ("3; 0 x", ParseError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        from_edge_list(text)


def test_two_cycle_reports_pair():
    with pytest.raises(TwoCycle) as info:
        from_edge_list("2; 0 1; 1 0")
    assert "0" in str(info.value) and "1" in str(info.value)


def test_relabel_maps_labels_in_order():
    d = from_edge_list("3; 10 20; 20 35", relabel=True)
    assert sorted(d.arcs) == [(0, 1), (1, 2)]
    assert d.labels == (10, 20, 35)


@given(digraphs())
def test_edge_list_round_trip(d):
    assert from_edge_list(to_edge_list(d)) == d


def test_serializer_sorts_arcs():
    assert to_edge_list(Digraph(3, [(2, 0), (0, 1)])) == "3\n0 1\n2 0\n"


def test_underlying_examples():
    assert underlying(tournament(3)).size == 3
    p = underlying(directed_path(4))
    assert sorted(p.edges) == [(0, 1), (1, 2), (2, 3)]
    assert underlying(Digraph(5)).size == 0


def test_r_value_examples():
    assert r_value(directed_path(3), [0, 1, 2]) == 0
    zig = Digraph(5, [(0, 1), (2, 1), (2, 3), (4, 3)])
    assert r_value(zig, [0, 1, 2, 3, 4]) == 3
    assert r_value(Digraph(1), [0]) == 0


def test_weak_connectivity_examples():
    assert is_weakly_connected(tournament(3))
    assert not is_weakly_connected(Digraph(2))
    assert is_weakly_connected(directed_path(7))


def test_induced_subdigraph_examples():
    sub, ids = induced_subdigraph(tournament(4), {1, 2, 3})
    assert ids == [1, 2, 3] and sub == tournament(3)
    empty, ids = induced_subdigraph(directed_cycle(3), set())
    assert empty.order == 0 and ids == []
    d = directed_cycle(5)
    assert induced_subdigraph(d, range(5))[0] == d


def test_induced_path_and_directed_path():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert is_induced_path(g, [0, 1, 2])
    assert not is_induced_path(g, [0, 1, 2, 3])
    assert is_directed_path(directed_path(4), [0, 1, 2, 3])
    assert not is_directed_path(directed_path(4), [1, 0])


@given(digraphs())
def test_nbrs_symmetric(d):
    g = d.underlying
    for u in range(d.order):
        for v in range(d.order):
            assert g.adjacent(u, v) == g.adjacent(v, u) == ((u, v) in d.arcs or (v, u) in d.arcs)
