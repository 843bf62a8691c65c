from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from sparsegraph.bench import bundled_corpus, load_graphs
from sparsegraph.graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """Center 0, leaves 1..leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(p: int) -> Graph:
    """Centers 0 and 1, leaves 2..p+1 on 0 and p+2..2p+1 on 1."""
    edges = [(0, 1)] + [(0, 2 + i) for i in range(p)] + [(1, 2 + p + i) for i in range(p)]
    return Graph.from_edges(2 * p + 2, edges)


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graph_and_order(draw, min_n=1, max_n=10):
    G = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(G.n))))
    return G, list(perm)


@pytest.fixture(scope="session")
def corpus():
    return load_graphs(bundled_corpus())


@pytest.fixture
def rng():
    return random.Random(12345)


def nx_graph(g: nx.Graph) -> Graph:
    g = nx.convert_node_labels_to_integers(g)
    return Graph.from_edges(g.number_of_nodes(), g.edges())


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
