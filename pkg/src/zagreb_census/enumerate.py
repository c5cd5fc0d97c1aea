"""Isomorphism-free generation of all simple graphs of a given order.

Graphs on ``n`` vertices are grown from canonical graphs on ``n - 1``
vertices by adding a vertex joined to a subset of the old ones.  A child is
kept only when the new vertex lies in the automorphism orbit of the child's
designated "last" vertex:

1. among the vertices of maximum degree,
2. those with maximum sum of neighbour degrees,
3. the one placed last by the canonical labeling.

Step 3 is only needed when steps 1-2 leave a tie.  Every class then has a
unique parent class, and duplicates from one parent (subsets in the same
orbit of the parent's automorphism group) are dropped by a per-parent set,
so no global table of seen graphs is kept.
"""

from __future__ import annotations

import itertools
from multiprocessing import Pool
from typing import Callable, Iterator, Sequence

import numpy as np

from .canon import canonize
from .graph import Graph, GraphError
from .graph6 import graph_from_code, n_bits

MAX_ENUMERATION_ORDER = 10
MAX_BRUTE_FORCE_ORDER = 7

# keep(order, degrees) -> whether a graph with these degrees may be extended
Prune = Callable[[int, list[int]], bool]


def _children(parent: tuple[int, ...], keep: Prune | None = None) -> set[int]:
    k = len(parent)
    n = k + 1
    new = k
    new_bit = 1 << new
    deg = [row.bit_count() for row in parent]
    maxdeg = max(deg)
    at_least = [0] * (k + 2)
    for t in range(k + 2):
        for u in range(k):
            if deg[u] >= t:
                at_least[t] |= 1 << u
    codes: set[int] = set()
    for s in range(maxdeg, k + 1):
        # new vertex of degree s must have maximum degree: no u in S with deg >= s
        forbid = at_least[s]
        for combo in itertools.combinations(range(k), s):
            subset = 0
            for u in combo:
                subset |= 1 << u
            if subset & forbid:
                continue
            adj = tuple(row | new_bit if subset >> u & 1 else row for u, row in enumerate(parent)) + (subset,)
            cdeg = [row.bit_count() for row in adj]
            if keep is not None and not keep(n, cdeg):
                continue
            tied = [u for u in range(k) if cdeg[u] == s]
            if tied:
                def nsum(v: int) -> int:
                    row, total = adj[v], 0
                    while row:
                        b = row & -row
                        total += cdeg[b.bit_length() - 1]
                        row ^= b
                    return total

                mine = nsum(new)
                beaten = False
                still = []
                for u in tied:
                    other = nsum(u)
                    if other > mine:
                        beaten = True
                        break
                    if other == mine:
                        still.append(u)
                if beaten:
                    continue
                tied = still
            if tied:
                code, order, orbit = canonize(n, adj, orbits=True)
                tied.append(new)
                tied_set = set(tied)
                last = next(v for v in reversed(order) if v in tied_set)
                if orbit[last] != orbit[new]:
                    continue
            else:
                code = canonize(n, adj)[0]
            codes.add(code)
    return codes


def _shard_children(args: tuple[Sequence[tuple[int, ...]], Prune | None]) -> set[int]:
    parents, keep = args
    out: set[int] = set()
    for parent in parents:
        out |= _children(parent, keep)
    return out


def _rows(n: int, code: int) -> tuple[int, ...]:
    return graph_from_code(n, code).adj


def _extend(n: int, parents: Sequence[tuple[int, ...]], keep: Prune | None, jobs: int) -> list[int]:
    """Sorted canonical codes of order ``n`` grown from ``parents``."""
    jobs = max(1, jobs)
    if jobs == 1 or len(parents) < 2 * jobs:
        codes = _shard_children((parents, keep))
    else:
        shards = [(parents[s::jobs], keep) for s in range(jobs)]
        with Pool(jobs) as pool:
            codes = set().union(*pool.map(_shard_children, shards))
    return sorted(codes)


def _check_order(n: int, hi: int = MAX_ENUMERATION_ORDER) -> None:
    if not 1 <= n <= hi:
        raise GraphError(f"order must be in 1..{hi}, got {n}")


_codes_cache: dict[int, tuple[int, ...]] = {1: (0,)}


def graph_codes(n: int, jobs: int = 1) -> tuple[int, ...]:
    """Canonical triangle codes of every class on ``n`` vertices, ascending.

    Results are cached per order; ``jobs`` only changes how a missing order
    is computed, never the result.
    """
    _check_order(n)
    if n not in _codes_cache:
        parents = [_rows(n - 1, c) for c in graph_codes(n - 1, jobs)]
        _codes_cache[n] = tuple(_extend(n, parents, None, jobs))
    return _codes_cache[n]


def clear_cache() -> None:
    for n in list(_codes_cache):
        if n > 1:
            del _codes_cache[n]


def enumerate_graphs(n: int, jobs: int = 1) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class, in ascending graph6 order."""
    _check_order(n)
    for code in graph_codes(n, jobs):
        yield graph_from_code(n, code)


def count_graphs(n: int, jobs: int = 1) -> int:
    return len(graph_codes(n, jobs))


class _RegularPrune:
    # Every induced subgraph of an r-regular graph on n vertices has degrees
    # <= r, and a vertex of degree d among k vertices still needs r - d of
    # the n - k missing ones.
    def __init__(self, n: int, r: int) -> None:
        self.n, self.r = n, r

    def __call__(self, k: int, deg: list[int]) -> bool:
        r, spare = self.r, self.n - k
        return all(d <= r and r - d <= spare for d in deg)


def _regular_codes(n: int, r: int, jobs: int) -> list[int]:
    keep = _RegularPrune(n, r)
    level = [(0,)]
    for k in range(2, n + 1):
        level = [_rows(k, c) for c in _extend(k, level, keep, jobs)]
    return sorted(graph_codes_of(level))


def graph_codes_of(rows: Sequence[tuple[int, ...]]) -> list[int]:
    return [canonize(len(adj), adj)[0] for adj in rows]


def enumerate_regular(n: int, r: int, jobs: int = 1) -> Iterator[Graph]:
    """Yield every r-regular class on ``n`` vertices, ascending graph6 order.

    Degrees above ``(n - 1) / 2`` are produced as complements of the
    complementary degree, which keeps the search tree small.
    """
    _check_order(n)
    if not 0 <= r <= n - 1:
        raise GraphError(f"degree must be in 0..{n - 1}, got {r}")
    if n * r % 2:
        return
    if n == 1:
        yield graph_from_code(1, 0)
        return
    flip = 2 * r > n - 1
    base = _regular_codes(n, n - 1 - r if flip else r, jobs)
    if flip:
        full = (1 << n_bits(n)) - 1
        codes = sorted(canonize(n, graph_from_code(n, full ^ c).adj)[0] for c in base)
    else:
        codes = base
    for code in codes:
        yield graph_from_code(n, code)


def _labeled_perm_tables(n: int) -> np.ndarray:
    """For each permutation, where each triangle bit position is sent."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    length = len(pairs)
    index = {p: length - 1 - k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), length), dtype=np.int64)
    for a, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            x, y = sorted((perm[i], perm[j]))
            table[a, length - 1 - k] = index[(x, y)]
    return table


def brute_force_classes(n: int) -> np.ndarray:
    """Class label (least labeled member) of every labeled graph on ``n`` vertices.

    Naive on purpose: each new class is expanded under all ``n!``
    relabelings.  Used only as an oracle.
    """
    _check_order(n, MAX_BRUTE_FORCE_ORDER)
    length = n_bits(n)
    total = 1 << length
    label = np.full(total, -1, dtype=np.int64)
    if length == 0:
        label[0] = 0
        return label
    table = _labeled_perm_tables(n)
    weights = np.left_shift(np.int64(1), table)
    g = 0
    while g < total:
        bits = [b for b in range(length) if g >> b & 1]
        images = weights[:, bits].sum(axis=1) if bits else np.zeros(1, dtype=np.int64)
        label[images] = g
        while g < total:
            window = np.flatnonzero(label[g : g + 4096] < 0)
            if window.size:
                g += int(window[0])
                break
            g += 4096
    return label


def brute_force_count(n: int) -> int:
    return int(np.unique(brute_force_classes(n)).size)


def labeled_count(n: int) -> int:
    return 2 ** n_bits(n)

