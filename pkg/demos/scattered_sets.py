"""Run every scattered-set heuristic on a graph and show what each deletes.

    python demos/scattered_sets.py [edge-list] [radius]
"""
import sys

from sparsegraph.bench import UQW_ALGORITHMS, bundled_corpus
from sparsegraph.graph import read_edge_list
from sparsegraph.uqw import score, verify_uqw


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else bundled_corpus() / "doublestar12.txt"
    r = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    G = read_edge_list(path)
    A = frozenset(range(G.n))
    lab = G.labels
    for name, algo in UQW_ALGORITHMS.items():
        res = algo(G, A, r, 0)
        assert verify_uqw(G, A, res)
        deleted = " ".join(str(lab[v]) for v in sorted(res.S)) or "-"
        print(f"{name:<7} |S|={len(res.S):<3} |B|={len(res.B):<4} score={score(G, res):<4} S: {deleted}")


if __name__ == "__main__":
    main()
