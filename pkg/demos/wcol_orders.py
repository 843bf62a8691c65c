"""Compare order heuristics on one graph and watch local search tighten them.

    python demos/wcol_orders.py [edge-list] [radius]
"""
import sys

from sparsegraph.bench import BASE_WCOL, WCOL_ALGORITHMS, bundled_corpus
from sparsegraph.graph import read_edge_list
from sparsegraph.localsearch import LsBudget, local_search
from sparsegraph.reach import wcol_of_order


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else bundled_corpus() / "karate.txt"
    r = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    G = read_edge_list(path)
    print(f"{path}: n={G.n} m={G.m}, radius {r}")
    print(f"{'algorithm':<18}{'wcol':>6}{'+ls':>6}")
    for name in BASE_WCOL:
        L = WCOL_ALGORITHMS[name](G, r, 0)
        before = wcol_of_order(G, L, r)
        after = wcol_of_order(G, local_search(G, L, r, LsBudget(max_no_improve=10 * G.n)), r)
        print(f"{name:<18}{before:>6}{after:>6}")


if __name__ == "__main__":
    main()
