"""Swap-based local search on a vertex order."""
from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass

from ._deadline import expired
from .graph import Graph, Order, bfs_distances
from .reach import reached_from


@dataclass(frozen=True)
class LsBudget:
    max_iterations: int = 200_000
    max_no_improve: int | None = None  # None means 50 * n
    seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.max_no_improve is not None and self.max_no_improve < 1:
            raise ValueError("max_no_improve must be positive")

    def patience(self, n: int) -> int:
        return self.max_no_improve if self.max_no_improve is not None else max(1, 50 * n)


class SwapState:
    """An order together with, for every source s, the set of vertices whose
    weakly reachable set contains s."""

    def __init__(self, G: Graph, L: Order, r: int):
        if r < 1:
            raise ValueError("radius must be at least 1")
        self.G = G
        self.r = r
        self.at = list(L.at)
        self.pos = list(L.pos)
        self.wreach: list[set[int]] = [set() for _ in range(G.n)]
        self.size = [0] * G.n
        self.reached: list[set[int]] = [set() for _ in range(G.n)]
        self._ball = lru_cache(maxsize=4096)(lambda v: frozenset(bfs_distances(G, v, r)))
        for s in self.at:
            self._attach(s)

    def order(self) -> Order:
        return Order(self.at)

    def _attach(self, s: int) -> None:
        self._replace(s, set(reached_from(self.G, self, s, self.r)))

    def _replace(self, s: int, new: set[int]) -> set[int]:
        """Make ``new`` the reach of s, touching only the difference."""
        old = self.reached[s]
        self.reached[s] = new
        wreach, size = self.wreach, self.size
        for v in old - new:
            wreach[v].discard(s)
            size[v] -= 1
        for v in new - old:
            wreach[v].add(s)
            size[v] += 1
        return old

    def objective(self) -> tuple[int, int, int]:
        top = max(self.size, default=0)
        return top, self.size.count(top), sum(self.size)

    def worst_vertices(self) -> list[int]:
        top = max(self.size)
        return [v for v, k in enumerate(self.size) if k == top]

    def swap(self, i: int, j: int) -> list[tuple[int, set[int]]]:
        """Swap positions i < j; returns what :meth:`undo` needs."""
        a, b = self.at[i], self.at[j]
        # a source strictly between i and j only sees a and b change sides,
        # so its reach is unchanged unless one of them is within r of it
        middle = self.at[i + 1:j]
        if len(middle) > 2:
            near_a, near_b = self._ball(a), self._ball(b)
            middle = [s for s in middle if s in near_a or s in near_b]
        sources = [a, *middle, b]
        self.at[i], self.at[j] = b, a
        self.pos[a], self.pos[b] = j, i
        return [(s, self._replace(s, set(reached_from(self.G, self, s, self.r)))) for s in sources]

    def undo(self, i: int, j: int, saved) -> None:
        a, b = self.at[i], self.at[j]
        self.at[i], self.at[j] = b, a
        self.pos[a], self.pos[b] = j, i
        for s, old in saved:
            self._replace(s, old)


def local_search(G: Graph, L: Order, r: int, budget: LsBudget = LsBudget()) -> Order:
    """Alternate rounds of random-earlier swaps and predecessor swaps of a
    vertex with the largest weakly reachable set, keeping only swaps that
    improve (max size, number of vertices at max, total size)."""
    if G.n < 2:
        return L
    rng = random.Random(budget.seed)
    state = SwapState(G, L, r)
    current = state.objective()
    patience = budget.patience(G.n)
    iterations = 0

    def attempt(rule: int) -> bool:
        nonlocal current
        v = rng.choice(state.worst_vertices())
        j = state.pos[v]
        if j == 0:
            return False
        i = rng.randrange(j) if rule == 1 else j - 1
        saved = state.swap(i, j)
        new = state.objective()
        if new < current:
            current = new
            return True
        state.undo(i, j, saved)
        return False

    def phase(rule: int) -> bool:
        nonlocal iterations
        improved = False
        misses = 0
        while misses < patience and iterations < budget.max_iterations:
            if expired():
                return improved
            iterations += 1
            if attempt(rule):
                improved = True
                misses = 0
            else:
                misses += 1
        return improved

    while iterations < budget.max_iterations and not expired():
        a = phase(1)
        b = phase(2)
        if not (a or b):
            break
    return state.order()
