"""First and second Zagreb indices in exact integer arithmetic.

All quantities with a half-integer coefficient are formed from doubled
integer intermediates and halved once, after checking divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import Graph, GraphError

Variant = Literal["minus", "plus"]


@dataclass(frozen=True, slots=True)
class ZagrebValues:
    n: int
    m: int
    m1: int
    m2: int


def _halve(x: int) -> int:
    if x % 2:
        raise ArithmeticError(f"{x} is odd; expected an exact half")
    return x // 2


def zagreb_values(g: Graph) -> ZagrebValues:
    deg = [row.bit_count() for row in g.adj]
    m1 = sum(d * d for d in deg)
    # each edge is seen from both ends
    doubled = 0
    for i, row in enumerate(g.adj):
        di = deg[i]
        while row:
            b = row & -row
            doubled += di * deg[b.bit_length() - 1]
            row ^= b
    return ZagrebValues(g.n, sum(deg) // 2, m1, doubled // 2)


def complement_zagreb(v: ZagrebValues) -> ZagrebValues:
    """Indices of the complement from the indices of the graph alone."""
    n, m = v.n, v.m
    m1 = n * (n - 1) ** 2 - 4 * m * (n - 1) + v.m1
    m2 = _halve(n * (n - 1) ** 3 - 6 * m * (n - 1) ** 2 + 4 * m * m + (2 * n - 3) * v.m1 - 2 * v.m2)
    return ZagrebValues(n, n * (n - 1) // 2 - m, m1, m2)


def basis(v: ZagrebValues) -> int:
    """``m*M1 - n*M2``: positive, zero or negative for classes A, B, C."""
    return v.m * v.m1 - v.n * v.m2


def degree_bound_gap(v: ZagrebValues) -> int:
    """``n*M1 - 4m^2``, never negative and zero exactly on regular graphs."""
    return v.n * v.m1 - 4 * v.m * v.m


def complement_cross(v: ZagrebValues) -> int:
    """``n*M2(co-G) - |E(co-G)|*M1(co-G)`` evaluated through the identities."""
    c = complement_zagreb(v)
    return v.n * c.m2 - c.m * c.m1


def complement_cross_closed(v: ZagrebValues) -> int:
    """The simplified right-hand side ``(n-2)(n*M1/2 - 2m^2) - n*M2 + m*M1``."""
    return _halve((v.n - 2) * degree_bound_gap(v)) - v.n * v.m2 + v.m * v.m1


def _check_regular_params(n: int, r: int) -> None:
    if n < 1 or not 0 <= r <= n - 1:
        raise GraphError(f"no r-regular graph with n={n}, r={r}")
    if n * r % 2:
        raise GraphError(f"n*r = {n * r} is odd; no {r}-regular graph on {n} vertices")


def regular_minus_edge_values(n: int, r: int) -> ZagrebValues:
    """Closed-form indices of an r-regular graph with one edge removed."""
    _check_regular_params(n, r)
    if r < 1:
        raise GraphError("an edgeless graph has no edge to remove")
    return ZagrebValues(n, n * r // 2 - 1, n * r * r - 4 * r + 2, _halve(n * r**3) - 3 * r * r + 2 * r)


def regular_plus_edge_values(n: int, r: int) -> ZagrebValues:
    """Closed-form indices of an r-regular graph with one edge added."""
    _check_regular_params(n, r)
    if r > n - 2:
        raise GraphError("a complete graph has no non-edge to add")
    return ZagrebValues(n, n * r // 2 + 1, n * r * r + 4 * r + 2, _halve(n * r**3) + 3 * r * r + 2 * r + 1)


def lemma2_margin(n: int, r: int, variant: Variant) -> int:
    """``n*M2 - m*M1`` of the regular graph with one edge removed or added."""
    if variant == "minus":
        v = regular_minus_edge_values(n, r)
    elif variant == "plus":
        v = regular_plus_edge_values(n, r)
    else:
        raise ValueError(f"variant must be 'minus' or 'plus', got {variant!r}")
    return -basis(v)


def lemma2_margin_closed(n: int, r: int, variant: Variant) -> int:
    return (n - 4) * r + 2 if variant == "minus" else (n - 4) * (r + 1) + 2


def complete_minus_edge_values(n: int) -> ZagrebValues:
    """Indices of ``K_n - e`` from the closed forms in the strictness argument."""
    if n < 2:
        raise GraphError("K_n - e needs n >= 2")
    m1 = (n - 2) * (n - 1) ** 2 + 2 * (n - 2) ** 2
    m2 = _halve(n * (n - 1) ** 3) - (n - 1) * (3 * n - 5)
    return ZagrebValues(n, n * (n - 1) // 2 - 1, m1, m2)
