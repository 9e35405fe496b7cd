"""Independent reference built on networkx.

Derived graphs are assembled with tuple-labelled new vertices and indices are
summed straight from the max/min definition of SDD and ``nx.Graph.degree``,
so nothing here shares code with topoindex.transforms or topoindex.indices.
"""
from fractions import Fraction
from math import prod

import networkx as nx


def nx_graph(n, edges):
    H = nx.Graph()
    H.add_nodes_from(range(n))
    H.add_edges_from(edges)
    return H


def nx_subdivision(H, k):
    out = nx.Graph()
    out.add_nodes_from(H.nodes)
    for u, v in H.edges:
        chain = [u] + [("new", u, v, t) for t in range(k)] + [v]
        nx.add_path(out, chain)
    return out


def nx_semi_total(H, k):
    out = nx.Graph(H)
    for u, v in H.edges:
        for t in range(k):
            w = ("new", u, v, t)
            out.add_edge(u, w)
            out.add_edge(v, w)
    return out


def nx_indices(H):
    d = dict(H.degree)
    E = list(H.edges)
    return {
        "M1": sum(d[u] + d[v] for u, v in E),
        "M2": sum(d[u] * d[v] for u, v in E),
        "F": sum(x**3 for x in d.values()),
        "PI1": prod(x**2 for x in d.values()),
        "PI2": prod(d[u] * d[v] for u, v in E),
        "HM": sum((d[u] + d[v]) ** 2 for u, v in E),
        "SDD": sum(
            (Fraction(max(d[u], d[v]), min(d[u], d[v])) + Fraction(min(d[u], d[v]), max(d[u], d[v])) for u, v in E),
            Fraction(0),
        ),
    }


def derived_indices(n, edges, transform, k):
    H = nx_graph(n, edges)
    D = nx_subdivision(H, k) if transform == "subdivision_k" else nx_semi_total(H, k)
    return nx_indices(D)
