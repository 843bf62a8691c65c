"""Weakly and strongly reachable sets of a vertex order."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from ._deadline import checkpoint
from .graph import Graph, Order


@dataclass(frozen=True)
class ReachProfile:
    sets: tuple[frozenset[int], ...]

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.sets[v]


def _check_radius(r: int) -> None:
    if r < 1:
        raise ValueError("radius must be at least 1")


def reached_from(G: Graph, L: Order, u: int, r: int) -> list[int]:
    """Vertices v with u in WReach_r(v): BFS of depth r from u among L-larger vertices."""
    pos = L.pos
    pu = pos[u]
    adj = G.adj
    dist = {u: 0}
    frontier = [u]
    for d in range(r):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist and pos[y] > pu:
                    dist[y] = d + 1
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return list(dist)


def wreach_sets(G: Graph, L: Order, r: int) -> ReachProfile:
    _check_radius(r)
    sets: list[set[int]] = [set() for _ in range(G.n)]
    for u in L.at:
        checkpoint()
        for v in reached_from(G, L, u, r):
            sets[v].add(u)
    return ReachProfile(tuple(frozenset(s) for s in sets))


def sreach_sets(G: Graph, L: Order, r: int) -> ReachProfile:
    """For each v: BFS from v through vertices L-larger than v; smaller
    vertices are recorded but never expanded."""
    _check_radius(r)
    pos = L.pos
    adj = G.adj
    out = []
    for v in range(G.n):
        checkpoint()
        pv = pos[v]
        found = {v}
        seen = {v}
        frontier = [v]
        for _ in range(r):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y in seen:
                        continue
                    seen.add(y)
                    if pos[y] < pv:
                        found.add(y)
                    else:
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        out.append(frozenset(found))
    return ReachProfile(tuple(out))


def wcol_of_order(G: Graph, L: Order, r: int) -> int:
    return wreach_sets(G, L, r).max_size


def col_of_order(G: Graph, L: Order, r: int) -> int:
    return sreach_sets(G, L, r).max_size


class OracleLimitError(ValueError):
    pass


def exact_wcol(G: Graph, r: int, limit: int = 9) -> tuple[int, Order]:
    """Minimum wcol_r over all orders, by depth-first search over prefixes.

    Placing u next fixes u as the L-minimum of every path from u through
    unplaced vertices, so WReach counts can be accumulated prefix by prefix
    and a prefix is abandoned as soon as some count reaches the best value.
    """
    _check_radius(r)
    n = G.n
    if n > limit:
        raise OracleLimitError(f"exact_wcol refuses n={n} (limit {limit})")
    if n == 0:
        return 0, Order([])

    adj = G.adj
    best = [math.inf, None]
    prefix: list[int] = []
    placed = [False] * n
    count = [1] * n  # every vertex weakly reaches itself

    def reach(u: int) -> list[int]:
        dist = {u: 0}
        q = deque([u])
        while q:
            x = q.popleft()
            if dist[x] == r:
                continue
            for y in adj[x]:
                if y not in dist and not placed[y]:
                    dist[y] = dist[x] + 1
                    q.append(y)
        del dist[u]
        return list(dist)

    def search(current: int) -> None:
        if len(prefix) == n:
            if current < best[0]:
                best[0] = current
                best[1] = list(prefix)
            return
        for u in range(n):
            if placed[u]:
                continue
            placed[u] = True
            touched = reach(u)
            worst = max(current, count[u])
            for w in touched:
                count[w] += 1
                if count[w] > worst:
                    worst = count[w]
            if worst < best[0]:
                prefix.append(u)
                search(worst)
                prefix.pop()
            for w in touched:
                count[w] -= 1
            placed[u] = False
            if best[0] <= current:
                return

    search(1)
    return int(best[0]), Order(best[1])
