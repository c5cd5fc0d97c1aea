"""Canonical labeling by partition refinement and individualization.

The canonical representative of a graph is the relabeling with the
lexicographically least graph6 triangle among all leaves of the search tree.
Leaves are discrete equitable partitions reached by individualizing vertices
of the first smallest non-singleton cell and refining.

Two pruning facts keep the tree small for the orders used here (n <= 10):

* twin vertices (equal open or equal closed neighbourhoods) can be swapped by
  an automorphism that fixes everything else, so only one twin per cell is
  ever individualized;
* leaves with equal codes differ by an automorphism, which is recorded when
  orbits are requested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, relabel
from .graph6 import encode, graph_code


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Identity key of an isomorphism class.

    ``code`` is the graph6 encoding of the canonical representative and
    ``perm[v]`` is the canonical position of input vertex ``v``.
    """

    code: bytes
    perm: tuple[int, ...]


def _refine(adj: tuple[int, ...], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    while splitters:
        w = splitters.pop()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                out.append(cell)
                continue
            frags: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                frags.setdefault(c, []).append(v)
            for c in sorted(frags):
                frag = frags[c]
                out.append(frag)
                mask = 0
                for v in frag:
                    mask |= 1 << v
                splitters.append(mask)
        cells = out
    return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonize(n: int, adj: tuple[int, ...], orbits: bool = False) -> tuple[int, list[int], list[int] | None]:
    """Return ``(code, order, orbit_ids)`` for the graph with rows ``adj``.

    ``order[p]`` is the input vertex at canonical position ``p``; ``code`` is
    the triangle integer of the canonical representative.  ``orbit_ids[v]``
    is the least vertex in the automorphism orbit of ``v`` (only when asked).
    """
    if n == 1:
        return 0, [0], [0] if orbits else None

    rep = list(range(n))
    first: dict[int, int] = {}
    for v in range(n):
        r = first.setdefault(adj[v], v)
        if r == v:
            r = first.setdefault(adj[v] | 1 << v, v)
        rep[v] = r

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    splitters = []
    for cell in cells:
        mask = 0
        for v in cell:
            mask |= 1 << v
        splitters.append(mask)
    cells = _refine(adj, cells, splitters)

    best_code = -1
    best_order: list[int] = []
    seen: dict[int, list[int]] = {}
    parent = list(range(n)) if orbits else None

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    stack = [cells]
    while stack:
        cells = stack.pop()
        target = -1
        size = n + 1
        for k, cell in enumerate(cells):
            s = len(cell)
            if 1 < s < size:
                target, size = k, s
                if s == 2:
                    break
        if target < 0:
            order = [cell[0] for cell in cells]
            code = _leaf_code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            if orbits:
                other = seen.setdefault(code, order)
                if other is not order:
                    for a, b in zip(other, order):
                        union(a, b)
            continue
        cell = cells[target]
        used = set()
        branches = []
        for v in cell:
            if rep[v] in used:
                continue
            used.add(rep[v])
            rest = [u for u in cell if u != v]
            branches.append(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1 :], [1 << v]))
        # reversed so that branches are explored in cell order
        stack.extend(reversed(branches))

    if not orbits:
        return best_code, best_order, None
    for v in range(n):
        union(v, rep[v])
    return best_code, best_order, [find(v) for v in range(n)]


def canonical_form(g: Graph) -> CanonicalForm:
    code, order, _ = canonize(g.n, g.adj)
    if graph_code(g) == code:
        perm = tuple(range(g.n))
    else:
        inv = [0] * g.n
        for p, v in enumerate(order):
            inv[v] = p
        perm = tuple(inv)
    return CanonicalForm(encode(relabel(g, perm)).encode("ascii"), perm)


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_form(g).perm)


def automorphism_orbits(g: Graph) -> list[int]:
    """Least vertex of each vertex's automorphism orbit."""
    return canonize(g.n, g.adj, orbits=True)[2]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonize(g.n, g.adj)[0] == canonize(h.n, h.adj)[0]
