"""Undirected simple graphs, family generators and the edge-list format.

Vertices are dense 0-based integers.  Edges are stored as ``(u, v)`` with
``u < v`` in sorted order, so two graphs are equal exactly when their vertex
counts and edge tuples are equal.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "random_regular",
    "erdos_renyi",
    "from_file",
)

MAX_RESTARTS = 1000


class GraphError(ValueError):
    """Raised for malformed edge lists and infeasible family parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return degree_sequence(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for :func:`generate`.

    ``a`` is the main size (vertex count for path/cycle/complete/regular/ER,
    number of leaves for the star, first part for complete_bipartite) and
    ``b`` the second part of a complete bipartite graph.
    """

    kind: str
    a: int = 0
    b: int = 0
    r: int = 0
    p: float = 0.0
    seed: int = 0
    path: str | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family {self.kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
        if not 0 <= self.seed < 2**64:
            raise GraphError("seed must be a 64-bit unsigned integer")

    def describe(self) -> str:
        k = self.kind
        if k == "complete_bipartite":
            return f"complete_bipartite({self.a},{self.b})"
        if k == "random_regular":
            return f"random_regular(n={self.a},r={self.r},seed={self.seed})"
        if k == "erdos_renyi":
            return f"erdos_renyi(n={self.a},p={self.p},seed={self.seed})"
        if k == "from_file":
            return f"file({self.path})"
        return f"{k}({self.a})"


def degree_sequence(G: Graph) -> list[int]:
    deg = [0] * G.n
    for u, v in G.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def regular_degree(G: Graph) -> int | None:
    """Common degree if every vertex has it, else None."""
    deg = degree_sequence(G)
    if not deg or any(d != deg[0] for d in deg):
        return None
    return deg[0]


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * G.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == G.n


@dataclass
class Diagnostics:
    ok: bool
    connected: bool
    messages: list[str] = field(default_factory=list)


def validate(G: Graph, require_connected: bool = False) -> Diagnostics:
    """Check a graph and report its connectivity.

    Simplicity is already enforced when a :class:`Graph` is built, so the
    only verdict that can fail here is connectivity (when required).
    """
    msgs = []
    connected = is_connected(G)
    ok = True
    if sum(degree_sequence(G)) != 2 * G.m:
        ok = False
        msgs.append("degree sum differs from 2m")
    if not connected:
        msgs.append("graph is not connected")
        if require_connected:
            ok = False
    return Diagnostics(ok=ok, connected=connected, messages=msgs)


# -- generators ---------------------------------------------------------------


def path_graph(a: int) -> Graph:
    return Graph(a, tuple((i, i + 1) for i in range(a - 1)))


def cycle_graph(a: int) -> Graph:
    if a < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Graph(a, tuple((i, i + 1) for i in range(a - 1)) + ((0, a - 1),))


def complete_graph(a: int) -> Graph:
    return Graph(a, tuple(combinations(range(a), 2)))


def star_graph(a: int) -> Graph:
    """K_{1,a}: center 0, leaves 1..a."""
    return Graph(a + 1, tuple((0, i) for i in range(1, a + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if b < 1:
        raise GraphError("complete_bipartite needs b >= 1")
    return Graph(a + b, tuple((i, j) for i in range(a) for j in range(a, a + b)))


def random_regular_graph(n: int, r: int, rng: random.Random) -> Graph:
    """Pairing (configuration) model, restarting on loops or multi-edges."""
    if r < 0 or r >= n or (n * r) % 2:
        raise GraphError(f"no simple {r}-regular graph on {n} vertices")
    for _ in range(MAX_RESTARTS):
        points = [v for v in range(n) for _ in range(r)]
        rng.shuffle(points)
        edges = set()
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v:
                break
            e = (min(u, v), max(u, v))
            if e in edges:
                break
            edges.add(e)
        else:
            return Graph(n, tuple(edges))
    raise GraphError(f"pairing model did not produce a simple graph in {MAX_RESTARTS} restarts")


def erdos_renyi_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def generate(spec: FamilySpec) -> Graph:
    kind, a = spec.kind, spec.a
    if kind == "from_file":
        if spec.path is None:
            raise GraphError("from_file needs a path")
        with open(spec.path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if a < 1:
        raise GraphError(f"size parameter must be >= 1, got {a}")
    if kind == "path":
        return path_graph(a)
    if kind == "cycle":
        return cycle_graph(a)
    if kind == "complete":
        return complete_graph(a)
    if kind == "star":
        return star_graph(a)
    if kind == "complete_bipartite":
        return complete_bipartite_graph(a, spec.b)
    rng = random.Random(spec.seed)
    if kind == "random_regular":
        return random_regular_graph(a, spec.r, rng)
    if not 0.0 <= spec.p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {spec.p}")
    return erdos_renyi_graph(a, spec.p, rng)


def connected_erdos_renyi(n: int, p: float, seed: int, retries: int = 50) -> tuple[Graph | None, int]:
    """Draw G(n, p) from one seeded stream until a connected sample appears.

    Returns ``(graph, attempts)``; graph is None once ``retries`` draws have
    all been disconnected.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    for attempt in range(1, retries + 1):
        G = erdos_renyi_graph(n, p, rng)
        if is_connected(G):
            return G, attempt
    return None, retries


# -- edge-list I/O --------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    declared = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or pairs:
                raise GraphError(f"line {lineno}: header 'n <count>' must come before any edge")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            declared = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v' with non-negative integers, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        pairs.append(e)
    top = max((v for e in pairs for v in e), default=-1)
    if declared is None:
        n = top + 1
    else:
        if top >= declared:
            raise GraphError(f"vertex label {top} >= declared n {declared}")
        n = declared
    return Graph(n, tuple(pairs))


def serialize(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, tuple(edges))
