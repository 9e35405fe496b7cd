import sys
from itertools import combinations
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from topoindex.graph import Graph  # noqa: E402


@st.composite
def simple_graphs(draw, max_n=8, connected=False):
    n = draw(st.integers(min_value=1 if not connected else 2, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    edges = set(chosen)
    if connected:
        # random spanning tree first, then extras
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            parent = order[draw(st.integers(min_value=0, max_value=i - 1))]
            u, v = order[i], parent
            edges.add((min(u, v), max(u, v)))
    return Graph(n, tuple(edges))


def connected_graphs(max_n=7):
    return simple_graphs(max_n=max_n, connected=True)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        title, ok, detail = mod.RESULTS[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
