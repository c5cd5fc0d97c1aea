import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, naive_zagreb
from zagreb_census.enumerate import enumerate_graphs, enumerate_regular
from zagreb_census.graph import (
    GraphError,
    add_edge,
    complement,
    complete_graph,
    cycle_graph,
    delete_edge,
    empty_graph,
    is_regular,
)
from zagreb_census.zagreb import (
    basis,
    complement_cross,
    complement_cross_closed,
    complement_zagreb,
    complete_minus_edge_values,
    degree_bound_gap,
    lemma2_margin,
    lemma2_margin_closed,
    regular_minus_edge_values,
    regular_plus_edge_values,
    zagreb_values,
)


def test_witness_values(k4_minus_e):
    v = zagreb_values(k4_minus_e)
    assert (v.m1, v.m2) == (26, 33)
    assert (v.m1, v.m2) == (complete_minus_edge_values(4).m1, complete_minus_edge_values(4).m2)


def test_edgeless_and_c4():
    v = zagreb_values(empty_graph(7))
    assert (v.m, v.m1, v.m2) == (0, 0, 0)
    c4 = zagreb_values(cycle_graph(4))
    assert (c4.m1, c4.m2) == (16, 16)


@given(graphs(max_n=10))
def test_matches_edge_list(g):
    v = zagreb_values(g)
    assert (v.m1, v.m2) == naive_zagreb(g.n, g.edges())
    assert v.m == g.m


@given(graphs(max_n=12))
def test_value_invariants(g):
    v = zagreb_values(g)
    assert v.m1 % 2 == 0
    assert v.m1 >= 0 and v.m2 >= 0
    assert (v.m1 == 0) == (v.m2 == 0) == (v.m == 0)
    assert degree_bound_gap(v) >= 0
    assert (degree_bound_gap(v) == 0) == is_regular(g)


def test_complement_of_k5_minus_e():
    v = complement_zagreb(zagreb_values(delete_edge(complete_graph(5), 3, 4)))
    assert (v.m1, v.m2, v.m) == (2, 1, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_complement_of_edgeless(n):
    v = complement_zagreb(zagreb_values(empty_graph(n)))
    assert v.m1 == n * (n - 1) ** 2
    assert v.m2 == n * (n - 1) // 2 * (n - 1) ** 2


@pytest.mark.parametrize("n", range(1, 8))
def test_complement_identities_exhaustive(n):
    for g in enumerate_graphs(n):
        assert complement_zagreb(zagreb_values(g)) == zagreb_values(complement(g))


@given(graphs(max_n=14))
def test_complement_cross_chain(g):
    v = zagreb_values(g)
    co = zagreb_values(complement(g))
    direct = g.n * co.m2 - co.m * co.m1
    assert direct == complement_cross(v) == complement_cross_closed(v)
    assert direct - basis(v) >= 0
    assert (direct == basis(v)) == is_regular(g)


def test_closed_form_examples():
    v = regular_minus_edge_values(4, 3)
    assert (v.m1, v.m2, v.m) == (26, 33, 5)
    v = regular_plus_edge_values(4, 0)
    assert (v.m1, v.m2, v.m) == (2, 1, 1)


@pytest.mark.parametrize(
    "n, r, variant, expected",
    [(4, 3, "minus", 2), (5, 2, "plus", 5), (10, 3, "minus", 20)],
)
def test_margins(n, r, variant, expected):
    assert lemma2_margin(n, r, variant) == expected


@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))))
def test_margin_closed_form_everywhere(nr):
    n, r = nr
    if n * r % 2:
        with pytest.raises(GraphError):
            regular_minus_edge_values(n, r)
        return
    if r >= 1:
        assert lemma2_margin(n, r, "minus") == lemma2_margin_closed(n, r, "minus")
    if r <= n - 2:
        assert lemma2_margin(n, r, "plus") == lemma2_margin_closed(n, r, "plus")


def test_parameter_errors():
    with pytest.raises(GraphError):
        regular_minus_edge_values(5, 1)
    with pytest.raises(GraphError):
        regular_minus_edge_values(5, 0)
    with pytest.raises(GraphError):
        regular_plus_edge_values(5, 4)
    with pytest.raises(ValueError):
        lemma2_margin(5, 2, "sideways")


@pytest.mark.parametrize("n", range(2, 9))
def test_closed_forms_on_regular_graphs(n):
    for r in range(n):
        for g in enumerate_regular(n, r):
            for i, j in g.edges():
                assert zagreb_values(delete_edge(g, i, j)) == regular_minus_edge_values(n, r)
            for i, j in complement(g).edges():
                assert zagreb_values(add_edge(g, i, j)) == regular_plus_edge_values(n, r)


@pytest.mark.parametrize("n", range(4, 9))
def test_k_n_minus_edge_closed_forms(n):
    h = delete_edge(complete_graph(n), 0, 1)
    assert zagreb_values(h) == complete_minus_edge_values(n)
    co = zagreb_values(complement(h))
    assert (co.m1, co.m2) == (2, 1)


def test_arithmetic_width():
    # largest cross product for n <= 64 stays far below 2**63
    v = zagreb_values(complete_graph(64))
    assert v.n * v.m2 < 2**40
    assert v.m * v.m1 < 2**40
