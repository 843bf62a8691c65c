import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, graph_and_order, graphs, path, star
from oracles import brute_wcol, naive_sreach, naive_wreach, random_connected
from sparsegraph.graph import Graph, Order, degeneracy_order
from sparsegraph.reach import (OracleLimitError, col_of_order, exact_wcol, sreach_sets, wcol_of_order,
                               wreach_sets)

A, B, C = 0, 1, 2


def test_wreach_path_examples():
    P3 = path(3)
    prof = wreach_sets(P3, Order([A, B, C]), 2)
    assert prof[C] == {A, B, C}
    assert prof.max_size == 3
    prof = wreach_sets(P3, Order([B, A, C]), 2)
    assert prof[C] == {B, C} and prof[A] == {A, B}
    assert prof.max_size == 2


@pytest.mark.parametrize("r", [1, 2, 5])
def test_star_center_first(r):
    G = star(5)
    prof = wreach_sets(G, Order(range(6)), r)
    assert all(prof[leaf] == {0, leaf} for leaf in range(1, 6))
    assert wcol_of_order(G, Order(range(6)), r) == 2


def test_sreach_examples():
    assert sreach_sets(complete(4), Order([2, 0, 3, 1]), 1)[1] == {0, 1, 2, 3}
    assert sreach_sets(path(3), Order([A, B, C]), 2)[C] == {B, C}


@pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (6, 4)])
def test_complete_graph_any_order(n, r):
    assert wcol_of_order(complete(n), Order(reversed(range(n))), r) == n


@pytest.mark.parametrize("G,r,expected", [
    (path(3), 2, 2),
    (complete(4), 1, 4),
    (star(4), 3, 2),
])
def test_exact_wcol_examples(G, r, expected):
    val, L = exact_wcol(G, r)
    assert val == expected
    assert wcol_of_order(G, L, r) == val


def test_exact_wcol_c5_matches_full_enumeration():
    G = cycle(5)
    best = min(wcol_of_order(G, Order(p), 2) for p in itertools.permutations(range(5)))
    assert exact_wcol(G, 2)[0] == best == brute_wcol(G, 2)


def test_exact_wcol_refuses_large_graphs():
    with pytest.raises(OracleLimitError):
        exact_wcol(path(10), 2)
    assert exact_wcol(path(10), 1, limit=10)[0] == 2


def test_radius_must_be_positive():
    with pytest.raises(ValueError):
        wreach_sets(path(2), Order([0, 1]), 0)


@settings(max_examples=150)
@given(graph_and_order(max_n=8), st.integers(1, 4))
def test_wreach_matches_path_enumeration(Gl, r):
    G, order = Gl
    prof = wreach_sets(G, Order(order), r)
    assert [set(prof[v]) for v in range(G.n)] == naive_wreach(G, order, r)


@settings(max_examples=150)
@given(graph_and_order(max_n=8), st.integers(1, 4))
def test_sreach_matches_path_enumeration(Gl, r):
    G, order = Gl
    prof = sreach_sets(G, Order(order), r)
    assert [set(prof[v]) for v in range(G.n)] == naive_sreach(G, order, r)


@given(graph_and_order(max_n=10))
def test_reach_profile_invariants(Gl):
    G, order = Gl
    L = Order(order)
    for r in range(1, 5):
        w, s = wreach_sets(G, L, r), sreach_sets(G, L, r)
        for v in range(G.n):
            assert v in w[v] and v in s[v]
            assert all(L.pos[u] <= L.pos[v] for u in w[v])
            assert s[v] <= w[v]


@given(graph_and_order(max_n=12))
def test_monotone_in_radius(Gl):
    G, order = Gl
    L = Order(order)
    prev = 0
    for r in range(1, 6):
        cur = wcol_of_order(G, L, r)
        assert cur >= prev
        assert col_of_order(G, L, r) <= cur
        prev = cur


@given(graphs(max_n=25))
def test_degeneracy_identity(G):
    L, d = degeneracy_order(G)
    assert wcol_of_order(G, L, 1) == d + 1


def test_exact_wcol_matches_brute_force_on_random_graphs():
    rng = random.Random(7)
    for _ in range(25):
        G = random_connected(rng.randint(2, 6), rng)
        r = rng.randint(1, 3)
        assert exact_wcol(G, r)[0] == brute_wcol(G, r)


def test_exact_wcol_empty_and_disconnected():
    assert exact_wcol(Graph.from_edges(0, []), 1)[0] == 0
    assert exact_wcol(Graph.from_edges(4, [(0, 1), (2, 3)]), 3)[0] == 2
