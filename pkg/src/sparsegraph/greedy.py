"""Greedy order construction from potential reachable sets.

``GreedyWReach`` fills the order left to right, always taking the vertex
whose weakly reachable set would be largest if it came next.
``GreedySReach`` fills it right to left, always taking the vertex whose
strongly reachable set would be smallest.
"""
from __future__ import annotations

import heapq

from ._deadline import checkpoint
from .graph import Graph, Order


class GreedyWReach:
    def __init__(self, G: Graph, r: int):
        if r < 1:
            raise ValueError("radius must be at least 1")
        self.G = G
        self.r = r
        self.placed: list[int] = []
        self.is_placed = [False] * G.n
        # potential[v]: WReach_r(v) if v were placed next (v itself included)
        self.potential: list[set[int]] = [{v} for v in range(G.n)]
        self.bfs_visits = 0
        self._heap = [(-1, -G.degree(v), v) for v in range(G.n)]
        heapq.heapify(self._heap)

    def _key(self, v):
        return (-len(self.potential[v]), -self.G.degree(v), v)

    def choose(self) -> int:
        heap = self._heap
        while True:
            key = heap[0]
            v = key[2]
            if self.is_placed[v] or key != self._key(v):
                heapq.heappop(heap)
                continue
            return v

    def place(self, v0: int) -> list[int]:
        """Put v0 next; returns the unplaced vertices that gained v0."""
        self.placed.append(v0)
        self.is_placed[v0] = True
        adj = self.G.adj
        seen = {v0}
        frontier = [v0]
        gained = []
        for _ in range(self.r):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen and not self.is_placed[y]:
                        seen.add(y)
                        nxt.append(y)
            if not nxt:
                break
            gained.extend(nxt)
            frontier = nxt
        self.bfs_visits += len(seen)
        for w in gained:
            self.potential[w].add(v0)
            heapq.heappush(self._heap, self._key(w))
        return gained

    def step(self) -> int:
        v = self.choose()
        self.place(v)
        return v

    def run(self) -> Order:
        while len(self.placed) < self.G.n:
            checkpoint()
            self.step()
        return Order(self.placed)


class GreedySReach:
    def __init__(self, G: Graph, r: int):
        if r < 1:
            raise ValueError("radius must be at least 1")
        self.G = G
        self.r = r
        self.suffix: list[int] = []  # placed vertices, latest position first
        self.is_placed = [False] * G.n
        # with nothing placed, a path may only be a single edge
        self.potential: list[set[int]] = [{v, *G.adj[v]} for v in range(G.n)]
        self._heap = [self._key(v) for v in range(G.n)]
        heapq.heapify(self._heap)

    def _key(self, v):
        return (len(self.potential[v]), self.G.degree(v), v)

    def choose(self) -> int:
        heap = self._heap
        while True:
            key = heap[0]
            v = key[2]
            if self.is_placed[v] or key != self._key(v):
                heapq.heappop(heap)
                continue
            return v

    def layers(self, v0: int) -> dict[int, int]:
        """Distance from v0 to each unplaced vertex along paths whose inner
        vertices are all placed, cut at r."""
        adj = self.G.adj
        dist = {v0: 0}
        out = {}
        frontier = [v0]
        for d in range(1, self.r + 1):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y in dist:
                        continue
                    dist[y] = d
                    if self.is_placed[y]:
                        nxt.append(y)
                    else:
                        out[y] = d
            frontier = nxt
            if not frontier:
                break
        return out

    def place(self, v0: int) -> None:
        layer = self.layers(v0)
        self.suffix.append(v0)
        self.is_placed[v0] = True
        by_depth: list[list[int]] = [[] for _ in range(self.r + 1)]
        for w, d in layer.items():
            by_depth[d].append(w)
        for w in layer:
            self.potential[w].discard(v0)
        for i in range(1, self.r):
            for j in range(1, self.r - i + 1):
                for v in by_depth[i]:
                    pv = self.potential[v]
                    pv.update(by_depth[j])
        for w in layer:
            heapq.heappush(self._heap, self._key(w))

    def step(self) -> int:
        v = self.choose()
        self.place(v)
        return v

    def run(self) -> Order:
        while len(self.suffix) < self.G.n:
            checkpoint()
            self.step()
        return Order(reversed(self.suffix))


def order_greedy_wreach(G: Graph, r: int) -> Order:
    return GreedyWReach(G, r).run()


def order_greedy_sreach(G: Graph, r: int) -> Order:
    return GreedySReach(G, r).run()
