import itertools

import pytest
from hypothesis import strategies as st

from zagreb_census.graph import Graph, from_edges

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def relabelings(draw, g: Graph) -> list[int]:
    return draw(st.permutations(range(g.n)))


def naive_zagreb(n: int, edges: list[tuple[int, int]]) -> tuple[int, int]:
    """M1 and M2 straight from an edge list."""
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    return sum(d * d for d in deg), sum(deg[i] * deg[j] for i, j in edges)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        if {tuple(sorted((perm[i], perm[j]))) for i, j in g.edges()} == target:
            return True
    return False


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def k4_minus_e() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
