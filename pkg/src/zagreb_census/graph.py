"""Immutable simple graphs stored as bit-vector adjacency rows.

Row ``adj[i]`` is an integer whose bit ``j`` is set when ``i`` and ``j`` are
adjacent.  Graphs are values: every mutating operation returns a new graph.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graph input or an invalid edge operation."""


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
        for i, row in enumerate(self.adj):
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency at ({i}, {j})")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as pairs ``(i, j)`` with ``i < j``, in lexicographic order."""
        return [(i, j) for i, row in enumerate(self.adj) for j in _bits(row >> (i + 1) << (i + 1))]

    def __repr__(self) -> str:
        from .graph6 import encode

        return f"Graph({encode(self)!r})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _trusted(n: int, adj: Iterable[int]) -> Graph:
    # Skips validation; callers guarantee symmetry and loop-freeness.
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
    adj = [0] * n
    for i, j in edges:
        i, j = operator.index(i), operator.index(j)
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return _trusted(n, adj)


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
    return _trusted(n, (full ^ (1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star with centre 0 and ``n - 1`` leaves."""
    return from_edges(n, [(0, i) for i in range(1, n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _trusted(g.n, (full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def _check_pair(g: Graph, i: int, j: int) -> None:
    if not (0 <= i < g.n and 0 <= j < g.n) or i == j:
        raise GraphError(f"({i}, {j}) is not a vertex pair of a graph with n={g.n}")


def delete_edge(g: Graph, i: int, j: int) -> Graph:
    _check_pair(g, i, j)
    if not g.has_edge(i, j):
        raise GraphError(f"({i}, {j}) is not an edge")
    adj = list(g.adj)
    adj[i] ^= 1 << j
    adj[j] ^= 1 << i
    return _trusted(g.n, adj)


def add_edge(g: Graph, i: int, j: int) -> Graph:
    _check_pair(g, i, j)
    if g.has_edge(i, j):
        raise GraphError(f"({i}, {j}) is already an edge")
    adj = list(g.adj)
    adj[i] |= 1 << j
    adj[j] |= 1 << i
    return _trusted(g.n, adj)


def degrees(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.adj]


def is_regular(g: Graph) -> bool:
    d = degrees(g)
    return min(d) == max(d)


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Apply ``perm``: vertex ``v`` of ``g`` becomes vertex ``perm[v]``."""
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        img = 0
        for u in _bits(row):
            img |= 1 << perm[u]
        adj[perm[v]] = img
    return _trusted(g.n, adj)
