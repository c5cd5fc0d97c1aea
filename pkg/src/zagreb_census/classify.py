"""Three-way classification by comparing M1/n with M2/m, and the map into C."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .canon import canonical_form
from .graph import Graph, GraphError, add_edge, complement, delete_edge, is_regular, relabel
from .zagreb import ZagrebValues, basis, zagreb_values

Label = Literal["A", "B", "C"]


@dataclass(frozen=True, slots=True)
class ClassLabel:
    """``value`` is decided by the sign of ``basis = m*M1 - n*M2``.

    Edgeless graphs have basis 0 and land in B; ``undefined`` records that
    M2/m itself has no value there.
    """

    value: Label
    basis: int
    undefined: bool = False


def label_values(v: ZagrebValues) -> ClassLabel:
    b = basis(v)
    value: Label = "A" if b > 0 else "B" if b == 0 else "C"
    return ClassLabel(value, b, v.m == 0)


def classify(g: Graph) -> ClassLabel:
    return label_values(zagreb_values(g))


def canonical_edge(g: Graph, present: bool = True) -> tuple[int, int]:
    """Least edge (or non-edge) of the canonical representative, in ``g``'s labels."""
    form = canonical_form(g)
    h = relabel(g, form.perm)
    inv = [0] * g.n
    for v, p in enumerate(form.perm):
        inv[p] = v
    for j in range(1, g.n):
        for i in range(j):
            if h.has_edge(i, j) == present:
                a, b = inv[i], inv[j]
                return (a, b) if a < b else (b, a)
    raise GraphError("no such vertex pair")


def map_to_c(g: Graph) -> Graph:
    """Image in class C of a graph from A or B.

    Irregular graphs go to their complement.  Regular graphs lose one edge,
    or gain one if they have none; the edge is chosen canonically so that
    isomorphic inputs give isomorphic outputs.
    """
    if g.n <= 3:
        raise GraphError("the map into C needs n > 3")
    if classify(g).value == "C":
        raise GraphError("graph is already in C")
    if not is_regular(g):
        return complement(g)
    if g.m:
        return delete_edge(g, *canonical_edge(g, True))
    return add_edge(g, *canonical_edge(g, False))


map_to_C = map_to_c
