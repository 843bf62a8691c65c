import pytest
from hypothesis import given, settings

from conftest import cycle, graphs, path, star
from sparsegraph.graph import Graph, components, induced_subgraph
from sparsegraph.flat import (ALL_FLAT_CONFIGS, FlatConfig, InnerOrder, RootChoice, flat_decompose, order_flat)
from sparsegraph.reach import wcol_of_order

SORT2 = FlatConfig(RootChoice.MAX_DEGREE_IN_C, InnerOrder.SORT, False)


def test_there_are_eighteen_named_variants():
    names = [c.name for c in ALL_FLAT_CONFIGS]
    assert len(set(names)) == 18
    assert "flat:2:sort:0" in names
    assert all(FlatConfig.parse(n).name == n for n in names)


@pytest.mark.parametrize("bad", ["flat:4:sort:0", "flat:1:xyz:0", "tree:1:bfs:0", "flat:1:bfs"])
def test_parse_rejects_bad_names(bad):
    with pytest.raises(ValueError):
        FlatConfig.parse(bad)


def test_star_pieces_are_center_then_leaves():
    dec = flat_decompose(star(5), SORT2)
    assert [p.vertices for p in dec.pieces] == [[0], [1], [2], [3], [4], [5]]


@pytest.mark.parametrize("rev", [False, True])
def test_star_order_sort2(rev):
    G = star(5)
    L = order_flat(G, FlatConfig(RootChoice.MAX_DEGREE_IN_C, InnerOrder.SORT, rev))
    assert L.at[0] == 0
    assert wcol_of_order(G, L, 2) == 2


def test_c6_trace():
    dec = flat_decompose(cycle(6), SORT2)
    first, second = dec.pieces[0], dec.pieces[1]
    assert first.vertices == [0]
    # remainder is the path 1-2-3-4-5; vertex 2 has the largest degree in it,
    # and of the two vertices next to H_1 the shallower one (1) is the contact
    assert second.root == 2
    assert second.contacts == {0: 1}
    assert second.vertices == [1, 2]
    _assert_valid(cycle(6), dec)


def _assert_valid(G, dec):
    owner = dec.piece_of(G.n)
    assert sorted(v for p in dec.pieces for v in p.vertices) == list(range(G.n))
    assert min(owner, default=0) >= 0
    for idx, p in enumerate(dec.pieces):
        H, _ = induced_subgraph(G, p.vertices)
        assert len(components(H)) == 1
        assert p.root in p.vertices
        # every earlier piece adjacent to the component got a contact
        for q, c in p.contacts.items():
            assert q < idx and c in p.vertices
            assert any(owner[u] == q for u in G.adj[c])
        # minimality: every leaf of the cut subtree is the root or a contact
        kids = {v: 0 for v in p.vertices}
        for v, par in p.tree_parent.items():
            assert par in kids and G.has_edge(v, par)
            kids[par] += 1
        needed = {p.root, *p.contacts.values()}
        assert all(v in needed for v, k in kids.items() if k == 0)


def _assert_all_earlier_neighbours_touched(G, dec):
    owner = dec.piece_of(G.n)
    for idx, p in enumerate(dec.pieces):
        for v in p.vertices:
            for u in G.adj[v]:
                q = owner[u]
                if q < idx:
                    assert q in p.contacts


@settings(max_examples=40)
@given(graphs(max_n=14))
def test_decomposition_invariants(G):
    for cfg in ALL_FLAT_CONFIGS:
        dec = flat_decompose(G, cfg)
        _assert_valid(G, dec)
        _assert_all_earlier_neighbours_touched(G, dec)
        L = order_flat(G, cfg)
        assert sorted(L.at) == list(range(G.n))


@pytest.mark.parametrize("cfg", ALL_FLAT_CONFIGS, ids=lambda c: c.name)
def test_invariants_on_corpus(cfg, corpus):
    for name, G in corpus:
        if G.n <= 80:
            _assert_valid(G, flat_decompose(G, cfg))


def test_path4_any_config():
    for cfg in ALL_FLAT_CONFIGS:
        _assert_valid(path(4), flat_decompose(path(4), cfg))


def test_reversal_flips_each_piece():
    G = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)])
    fwd = order_flat(G, FlatConfig(RootChoice.MAX_PROCESSED_NEIGHBORS, InnerOrder.BFS, False))
    rev = order_flat(G, FlatConfig(RootChoice.MAX_PROCESSED_NEIGHBORS, InnerOrder.BFS, True))
    pieces = flat_decompose(G, FlatConfig(RootChoice.MAX_PROCESSED_NEIGHBORS, InnerOrder.BFS)).pieces
    k = 0
    for p in pieces:
        size = len(p.vertices)
        assert rev.at[k:k + size] == tuple(reversed(fwd.at[k:k + size]))
        k += size


def test_inner_orders_start_at_root():
    G = cycle(9)
    for inner in (InnerOrder.BFS, InnerOrder.DFS):
        cfg = FlatConfig(RootChoice.MAX_DEGREE_IN_C, inner)
        dec = flat_decompose(G, cfg)
        L = order_flat(G, cfg)
        k = 0
        for p in dec.pieces:
            assert L.at[k] == p.root
            k += len(p.vertices)
