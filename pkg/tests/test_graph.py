import random

import pytest
from conftest import simple_graphs
from hypothesis import given

from topoindex.graph import (
    FamilySpec,
    Graph,
    GraphError,
    degree_sequence,
    generate,
    is_connected,
    parse_edge_list,
    random_regular_graph,
    serialize,
    validate,
)


def test_parse_single_edge():
    assert parse_edge_list("0 1") == Graph(2, ((0, 1),))


def test_parse_triangle_is_canonicalised():
    G = parse_edge_list("0 1\n1 2\n0 2")
    assert G.n == 3
    assert G.edges == ((0, 1), (0, 2), (1, 2))


def test_parse_reversed_pairs_and_comments():
    G = parse_edge_list("# a comment\nn 4\n\n2 1\n  3 0  \n")
    assert G.n == 4
    assert G.edges == ((0, 3), (1, 2))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("0 0", "self-loop"),
        ("0 1\n1 0", "duplicate"),
        ("n 2\n0 2", "declared"),
        ("0 1 2", "expected"),
        ("a b", "expected"),
        ("0 -1", "expected"),
        ("0 1\nn 3", "header"),
        ("n x", "header"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_edge_list(text)


def test_header_allows_isolated_vertices():
    G = parse_edge_list("n 5\n0 1\n")
    assert G.n == 5 and degree_sequence(G) == [1, 1, 0, 0, 0]


def test_graph_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, ((0, 3),))
    with pytest.raises(GraphError):
        Graph(3, ((1, 1),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))


@pytest.mark.parametrize(
    "spec, m, degrees",
    [
        (FamilySpec("cycle", a=3), 3, [2, 2, 2]),
        (FamilySpec("complete", a=4), 6, [3, 3, 3, 3]),
        (FamilySpec("path", a=3), 2, [1, 2, 1]),
        (FamilySpec("star", a=3), 3, [3, 1, 1, 1]),
        (FamilySpec("complete_bipartite", a=2, b=3), 6, [3, 3, 2, 2, 2]),
    ],
)
def test_deterministic_families(spec, m, degrees):
    G = generate(spec)
    assert G.m == m
    assert degree_sequence(G) == degrees
    assert generate(spec) == G


def test_canonical_labelling():
    assert generate(FamilySpec("path", a=4)).edges == ((0, 1), (1, 2), (2, 3))
    assert (0, 4) in generate(FamilySpec("cycle", a=5)).edges
    assert generate(FamilySpec("star", a=2)).edges == ((0, 1), (0, 2))
    assert generate(FamilySpec("complete_bipartite", a=1, b=2)).edges == ((0, 1), (0, 2))


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("random_regular", a=5, r=3),
        FamilySpec("random_regular", a=4, r=4),
        FamilySpec("erdos_renyi", a=5, p=1.5),
        FamilySpec("path", a=0),
        FamilySpec("cycle", a=2),
    ],
)
def test_infeasible_families(spec):
    with pytest.raises(GraphError):
        generate(spec)


def test_unknown_family_and_bad_seed():
    with pytest.raises(GraphError):
        FamilySpec("hypercube", a=3)
    with pytest.raises(GraphError):
        FamilySpec("erdos_renyi", a=3, p=0.5, seed=2**64)


@pytest.mark.parametrize("n, r", [(8, 3), (10, 4), (6, 5), (7, 2), (5, 0)])
def test_random_regular_is_regular_and_reproducible(n, r):
    spec = FamilySpec("random_regular", a=n, r=r, seed=7)
    G = generate(spec)
    assert degree_sequence(G) == [r] * n
    assert generate(spec) == G


def test_random_regular_depends_on_seed():
    graphs = {generate(FamilySpec("random_regular", a=10, r=3, seed=s)).edges for s in range(10)}
    assert len(graphs) > 1


def test_random_regular_uses_given_stream():
    a = random_regular_graph(8, 3, random.Random(1))
    b = random_regular_graph(8, 3, random.Random(1))
    assert a == b


def test_erdos_renyi_extremes():
    assert generate(FamilySpec("erdos_renyi", a=5, p=0.0, seed=3)).m == 0
    assert generate(FamilySpec("erdos_renyi", a=5, p=1.0, seed=3)).m == 10


def test_validate_examples():
    C3 = generate(FamilySpec("cycle", a=3))
    assert validate(C3, require_connected=True).ok
    split = Graph(4, ((0, 1), (2, 3)))
    d = validate(split, require_connected=True)
    assert not d.ok and not d.connected
    assert validate(split).ok
    K2 = generate(FamilySpec("complete", a=2))
    d = validate(K2)
    assert d.ok and d.connected


def test_from_file(tmp_path):
    p = tmp_path / "g.edges"
    p.write_text("0 1\n1 2\n")
    assert generate(FamilySpec("from_file", path=str(p))) == Graph(3, ((0, 1), (1, 2)))


@given(simple_graphs())
def test_degree_sum_is_twice_edges(G):
    assert sum(degree_sequence(G)) == 2 * G.m


@given(simple_graphs())
def test_serialize_roundtrip(G):
    assert parse_edge_list(serialize(G)) == G


@given(simple_graphs())
def test_connectivity_agrees_with_networkx(G):
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    assert is_connected(G) == nx.is_connected(H)
