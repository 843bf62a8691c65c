"""Uniform quasi-wideness: results, verification, scoring and simple heuristics."""
from __future__ import annotations

import heapq
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from ._deadline import checkpoint
from .graph import Graph, bfs_distances

INF = math.inf


class InvalidResult(ValueError):
    pass


@dataclass(frozen=True)
class UqwResult:
    S: frozenset[int]
    B: frozenset[int]
    r: int
    A: frozenset[int]

    @classmethod
    def make(cls, S: Iterable[int], B: Iterable[int], r: int, A: Iterable[int]) -> "UqwResult":
        return cls(frozenset(S), frozenset(B), r, frozenset(A))

    def serialize(self, G: Graph) -> str:
        lab = G.labels
        s = " ".join(str(lab[v]) for v in sorted(self.S))
        b = " ".join(str(lab[v]) for v in sorted(self.B))
        return f"S: {s}\nB: {b}\n"


def verify_uqw(G: Graph, A: Iterable[int], res: UqwResult) -> bool:
    A = frozenset(A)
    S, B = res.S, res.B
    if not B <= A - S:
        return False
    for b in B:
        near = bfs_distances(G, b, res.r, S)
        if any(u in B for u in near if u != b):
            return False
    return True


def distance_maps(G: Graph, S: Iterable[int], r: int, within_remainder: bool = False) -> dict[int, dict[int, int]]:
    """For each s in S the distances (up to r) from s, either in G or in
    G - (S minus s)."""
    S = sorted(S)
    out = {}
    for s in S:
        forbidden = frozenset(S) - {s} if within_remainder else frozenset()
        out[s] = bfs_distances(G, s, r, forbidden)
    return out


def distance_profile(G: Graph, v: int, S: Iterable[int], r: int, within_remainder: bool = False) -> tuple:
    maps = distance_maps(G, S, r, within_remainder)
    return tuple(maps[s].get(v, INF) for s in sorted(maps))


def profile_classes(G: Graph, res: UqwResult, within_remainder: bool = False) -> Counter:
    maps = distance_maps(G, res.S, res.r, within_remainder)
    order = sorted(maps)
    return Counter(tuple(maps[s].get(b, INF) for s in order) for b in res.B)


def score(G: Graph, res: UqwResult, within_remainder: bool = False, check: bool = True) -> int:
    """Size of the largest group of B-vertices sharing one distance profile on S."""
    if check and not verify_uqw(G, res.A, res):
        raise InvalidResult("B is not r-independent in G - S, or not inside A - S")
    if not res.B:
        return 0
    if not res.S:
        return len(res.B)
    return max(profile_classes(G, res, within_remainder).values())


# ---------------------------------------------------------------- independent sets

def greedy_independent_set_adj(adj: Mapping[int, Iterable[int]]) -> set[int]:
    """Min-degree greedy maximal independent set of an adjacency mapping
    (ties by smallest vertex)."""
    nbrs = {v: set(us) for v, us in adj.items()}
    deg = {v: len(us) for v, us in nbrs.items()}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    alive = set(nbrs)
    out = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v not in alive or d != deg[v]:
            continue
        out.add(v)
        dropped = [v, *(u for u in nbrs[v] if u in alive)]
        for u in dropped:
            alive.discard(u)
        for u in dropped:
            for w in nbrs[u]:
                if w in alive:
                    deg[w] -= 1
                    heapq.heappush(heap, (deg[w], w))
    return out


def greedy_independent_set(G: Graph, A: Iterable[int] | None = None) -> set[int]:
    A = set(range(G.n)) if A is None else set(A)
    return greedy_independent_set_adj({v: [u for u in G.adj[v] if u in A] for v in A})


def power_adjacency(G: Graph, A: Iterable[int], r: int, forbidden=frozenset()) -> dict[int, set[int]]:
    """Adjacency of (G - forbidden)^r restricted to A - forbidden."""
    A = set(A) - set(forbidden)
    out = {}
    for a in A:
        checkpoint()
        near = bfs_distances(G, a, r, forbidden)
        out[a] = {u for u in near if u in A and u != a}
    return out


def greedy_scattered_set(G: Graph, A: Iterable[int], r: int, forbidden=frozenset()) -> set[int]:
    """Greedy r-independent subset of A - forbidden in G - forbidden."""
    return greedy_independent_set_adj(power_adjacency(G, A, r, forbidden))


# ---------------------------------------------------------------- ld heuristic

def top_degree_vertices(G: Graph, k: int) -> list[int]:
    return sorted(range(G.n), key=lambda v: (-G.degree(v), v))[:k]


def uqw_ld(G: Graph, A: Iterable[int], r: int, K: int = 20) -> UqwResult:
    """Delete the k highest-degree vertices for k = 0..K and keep the best
    greedy r-scattered set by score (ties go to smaller k)."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    if K < 0:
        raise ValueError("K must be non-negative")
    A = frozenset(A)
    hubs = top_degree_vertices(G, min(K, G.n))
    best = None
    for k in range(len(hubs) + 1):
        S = frozenset(hubs[:k])
        B = greedy_scattered_set(G, A, r, S)
        res = UqwResult(S, frozenset(B), r, A)
        val = score(G, res, check=False)
        if best is None or val > best[0]:
            best = (val, res)
    return best[1]
