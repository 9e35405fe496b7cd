"""k-th subdivision and k-th semi-total point graphs.

Both constructions keep the original labels 0..n-1 and number the new
vertices of the j-th sorted edge as ``n + j*k + t`` for t in 0..k-1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, degree_sequence

TRANSFORM_KINDS = ("subdivision_k", "semi_total_k")

_ALIASES = {
    "sk": "subdivision_k",
    "s": "subdivision_k",
    "subdivision": "subdivision_k",
    "subdivision_k": "subdivision_k",
    "rk": "semi_total_k",
    "r": "semi_total_k",
    "semi_total": "semi_total_k",
    "semi_total_k": "semi_total_k",
}


@dataclass(frozen=True)
class DerivedSpec:
    kind: str
    k: int

    def __post_init__(self):
        kind = _ALIASES.get(self.kind.lower())
        if kind is None:
            raise ValueError(f"unknown transform {self.kind!r}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        object.__setattr__(self, "kind", kind)

    def apply(self, G: Graph) -> Graph:
        return transform(G, self.kind, self.k)


def subdivide_k(G: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    n = G.n
    edges = []
    for j, (u, v) in enumerate(G.edges):
        chain = [u, *range(n + j * k, n + j * k + k), v]
        edges.extend(zip(chain, chain[1:]))
    return Graph(n + k * G.m, tuple(edges))


def semi_total_k(G: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    n = G.n
    edges = list(G.edges)
    for j, (u, v) in enumerate(G.edges):
        for w in range(n + j * k, n + j * k + k):
            edges.append((u, w))
            edges.append((v, w))
    return Graph(n + k * G.m, tuple(edges))


def transform(G: Graph, kind: str, k: int) -> Graph:
    kind = _ALIASES.get(kind.lower(), kind)
    if kind == "subdivision_k":
        return subdivide_k(G, k)
    if kind == "semi_total_k":
        return semi_total_k(G, k)
    raise ValueError(f"unknown transform {kind!r}")


def expected_degrees(G: Graph, kind: str, k: int) -> list[int]:
    """Per-vertex degrees that the construction is supposed to produce."""
    kind = _ALIASES.get(kind.lower(), kind)
    base = degree_sequence(G)
    scale = k + 1 if kind == "semi_total_k" else 1
    return [scale * d for d in base] + [2] * (k * G.m)
