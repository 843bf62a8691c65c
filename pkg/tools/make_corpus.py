"""Regenerate the bundled benchmark corpus in src/sparsegraph/data/corpus.

Run once; the outputs are committed.  Needs networkx and scipy.
"""
from __future__ import annotations

import random
from pathlib import Path

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

OUT = Path(__file__).resolve().parents[1] / "src" / "sparsegraph" / "data" / "corpus"


def delaunay(n: int, seed: int) -> nx.Graph:
    pts = np.random.default_rng(seed).random((n, 2))
    g = nx.Graph()
    for a, b, c in Delaunay(pts).simplices:
        g.add_edges_from([(a, b), (b, c), (a, c)])
    return g


def double_star(p: int) -> nx.Graph:
    g = nx.Graph([(0, 1)])
    for i in range(p):
        g.add_edge(0, 2 + i)
        g.add_edge(1, 2 + p + i)
    return g


def caterpillar(spine: int, legs: int) -> nx.Graph:
    g = nx.path_graph(spine)
    nxt = spine
    for v in range(spine):
        for _ in range(legs):
            g.add_edge(v, nxt)
            nxt += 1
    return g


def graphs():
    yield "karate", nx.karate_club_graph()
    yield "lesmis", nx.les_miserables_graph()
    yield "florentine", nx.florentine_families_graph()
    yield "davis", nx.davis_southern_women_graph()
    yield "grid8x8", nx.grid_2d_graph(8, 8)
    yield "tree60", nx.random_labeled_tree(60, seed=7)
    yield "delaunay80", delaunay(80, 11)
    yield "er80", nx.gnp_random_graph(80, 0.06, seed=3)
    yield "ba100", nx.barabasi_albert_graph(100, 2, seed=5)
    yield "ws90", nx.watts_strogatz_graph(90, 4, 0.1, seed=9)
    yield "hypercube6", nx.hypercube_graph(6)
    yield "star30", nx.star_graph(30)
    yield "doublestar12", double_star(12)
    yield "caterpillar", caterpillar(15, 3)
    yield "ladder40", nx.ladder_graph(40)
    yield "k3_12", nx.complete_bipartite_graph(3, 12)
    yield "bintree5", nx.balanced_tree(2, 5)
    yield "petersen", nx.petersen_graph()
    yield "regular3_60", nx.random_regular_graph(3, 60, seed=13)
    yield "cycle_plus_path", nx.disjoint_union(nx.cycle_graph(25), nx.path_graph(20))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, g in graphs():
        g = nx.convert_node_labels_to_integers(g, first_label=1, ordering="sorted"
                                               if all(isinstance(v, int) for v in g) else "default")
        rows = sorted(tuple(sorted(e)) for e in g.edges() if e[0] != e[1])
        with open(OUT / f"{name}.txt", "w", encoding="utf-8") as fh:
            fh.write(f"# {name}: n={g.number_of_nodes()} m={g.number_of_edges()}\n")
            fh.writelines(f"{u} {v}\n" for u, v in rows)


if __name__ == "__main__":
    random.seed(0)
    main()
