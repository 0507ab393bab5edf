import pytest
from hypothesis import given
from hypothesis import strategies as st

from micut.errors import GraphFormatError
from micut.graph import (
    Graph,
    complement,
    cut_size,
    cycle_graph,
    is_independent,
    is_maximal_independent,
    max_degree,
    parse_graph,
    serialize_graph,
    star_graph,
)

from conftest import graphs, naive_cut


def test_parse_path():
    g = parse_graph("p edge 3 2\ne 1 2\ne 2 3")
    assert g.node_count == 3
    assert g.edges == {(1, 2), (2, 3)}


def test_parse_single_node():
    g = parse_graph("p edge 1 0")
    assert g.node_count == 1 and g.edge_count == 0


def test_parse_rejects_self_loop():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph("p edge 2 1\ne 1 1")


@pytest.mark.parametrize("text, line", [
    ("p edge x 1\n", 1),
    ("p edge 3\n", 1),
    ("p edge 2 1\ne 1 3\n", 2),
    ("c hi\ne 1 2\n", 2),
    ("p edge 2 1\nq 1 2\n", 2),
])
def test_parse_errors_name_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("c only a comment\n")


def test_parse_merges_duplicates_and_is_order_insensitive():
    a = parse_graph(b"c x\np edge 3 3\ne 2 1\ne 1 2\ne 3 2\n")
    b = parse_graph("p edge 3 2\ne 2 3\ne 1 2\n")
    assert a == b


def test_serialize_sorted():
    g = Graph.from_edges(4, [(4, 3), (2, 1), (3, 1)])
    assert serialize_graph(g) == "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n"


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 3)])


def test_independence_examples(p3):
    assert is_independent(p3, {1, 3})
    assert not is_independent(p3, {1, 2})
    assert is_independent(p3, set())


def test_maximality_examples(p3, triangle):
    assert is_maximal_independent(p3, {2})
    assert not is_maximal_independent(p3, {1})
    assert is_maximal_independent(triangle, {1})


def test_cut_examples(p3, k14):
    assert cut_size(p3, {2}) == 2
    assert cut_size(k14, {1}) == 4
    assert cut_size(cycle_graph(5), set()) == 0


def test_max_degree(p3):
    assert max_degree(p3) == 2
    assert max_degree(star_graph(4)) == 4
    assert max_degree(Graph.from_edges(3)) == 0
    assert max_degree(Graph.from_edges(0)) == 0


@given(graphs(), st.data())
def test_cut_symmetric_under_complement(g, data):
    s = data.draw(st.sets(st.sampled_from(list(g.nodes)))) if g.node_count else set()
    assert cut_size(g, s) == cut_size(g, complement(g, s)) == naive_cut(g, s)


@given(graphs(min_nodes=1))
def test_maximal_implies_independent_and_nonempty(g):
    for code in range(1 << g.node_count):
        s = {v for v in g.nodes if code >> (v - 1) & 1}
        if is_maximal_independent(g, s):
            assert is_independent(g, s)
            assert s


@given(graphs())
def test_round_trip(g):
    assert parse_graph(serialize_graph(g, ["comment"])) == g
