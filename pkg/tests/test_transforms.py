import pytest
from conftest import connected_graphs, simple_graphs
from hypothesis import given
from hypothesis import strategies as st

from topoindex.graph import FamilySpec, Graph, degree_sequence, generate, is_connected
from topoindex.transforms import DerivedSpec, expected_degrees, semi_total_k, subdivide_k, transform

C3 = generate(FamilySpec("cycle", a=3))
K2 = generate(FamilySpec("complete", a=2))
ks = st.integers(min_value=0, max_value=4)


def test_subdivide_zero_is_identity():
    assert subdivide_k(C3, 0) == C3


def test_subdivide_c3_once_is_hexagon():
    H = subdivide_k(C3, 1)
    assert (H.n, H.m) == (6, 6)
    assert degree_sequence(H) == [2] * 6
    assert is_connected(H)


def test_subdivide_c3_twice_size():
    H = subdivide_k(C3, 2)
    assert (H.n, H.m) == (9, 9)


def test_subdivide_labelling():
    # edges of C3 in order: (0,1), (0,2), (1,2)
    H = subdivide_k(C3, 2)
    assert H.edges == tuple(sorted([(0, 3), (3, 4), (1, 4), (0, 5), (5, 6), (2, 6), (1, 7), (7, 8), (2, 8)]))


def test_semi_total_zero_is_identity():
    assert semi_total_k(C3, 0) == C3


def test_semi_total_k2_once_is_triangle():
    assert semi_total_k(K2, 1) == C3


def test_semi_total_c3_twice_size():
    H = semi_total_k(C3, 2)
    assert (H.n, H.m) == (9, 15)


def test_semi_total_labelling():
    H = semi_total_k(Graph(2, ((0, 1),)), 2)
    assert H.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))


def test_derived_spec():
    assert DerivedSpec("sk", 2).kind == "subdivision_k"
    assert DerivedSpec("RK", 1).apply(K2) == C3
    with pytest.raises(ValueError):
        DerivedSpec("line", 1)
    with pytest.raises(ValueError):
        DerivedSpec("sk", -1)
    with pytest.raises(ValueError):
        transform(C3, "total", 1)


@given(simple_graphs(), ks)
def test_subdivision_size_and_degree_law(G, k):
    H = subdivide_k(G, k)
    assert H.n == G.n + k * G.m
    assert H.m == (1 + k) * G.m
    assert degree_sequence(H) == expected_degrees(G, "sk", k)


@given(simple_graphs(), ks)
def test_semi_total_size_and_degree_law(G, k):
    H = semi_total_k(G, k)
    assert H.n == G.n + k * G.m
    assert H.m == (1 + 2 * k) * G.m
    deg_G = degree_sequence(G)
    deg_H = degree_sequence(H)
    assert deg_H[: G.n] == [(k + 1) * d for d in deg_G]
    assert deg_H[G.n :] == [2] * (k * G.m)


@given(connected_graphs(), ks, st.sampled_from(["sk", "rk"]))
def test_connectivity_preserved(G, k, kind):
    assert is_connected(transform(G, kind, k))


@given(simple_graphs(), ks, st.sampled_from(["sk", "rk"]))
def test_deterministic(G, k, kind):
    assert transform(G, kind, k) == transform(G, kind, k)
