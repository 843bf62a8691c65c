"""Simple ordering heuristics plus the treedepth and min-degree heuristics."""
from __future__ import annotations

import enum
import heapq
import random
from dataclasses import dataclass

from ._deadline import checkpoint
from .graph import Graph, Order, components, degeneracy_order, power_graph


class SimpleKind(enum.Enum):
    DEGREE_DESC = "degree"
    DEGENERACY = "degeneracy"
    RANDOM = "random"
    POWER_DEGREE_DESC = "power-degree"
    POWER_DEGENERACY = "power-degeneracy"


@dataclass(frozen=True)
class SimpleVariant:
    kind: SimpleKind
    r: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.kind in (SimpleKind.POWER_DEGREE_DESC, SimpleKind.POWER_DEGENERACY) and self.r < 1:
            raise ValueError("power variants need r >= 1")


def degree_desc_order(G: Graph) -> Order:
    return Order(sorted(range(G.n), key=lambda v: (-G.degree(v), v)))


def order_simple(G: Graph, variant: SimpleVariant) -> Order:
    kind = variant.kind
    if kind is SimpleKind.DEGREE_DESC:
        return degree_desc_order(G)
    if kind is SimpleKind.DEGENERACY:
        return degeneracy_order(G)[0]
    if kind is SimpleKind.RANDOM:
        seq = list(range(G.n))
        random.Random(variant.seed).shuffle(seq)
        return Order(seq)
    H = power_graph(G, variant.r)
    if kind is SimpleKind.POWER_DEGREE_DESC:
        return degree_desc_order(H)
    return degeneracy_order(H)[0]


# ------------------------------------------------------------ min-degree

def min_degree_elimination(G: Graph) -> tuple[Order, list[int]]:
    """Minimum-degree elimination with fill edges.

    Eliminated vertices fill the order from the back.  Returns the order and,
    per vertex, its degree in the elimination graph when it was removed.
    That degree is the number of earlier vertices strongly reachable at
    unbounded radius.
    """
    n = G.n
    adj = [set(a) for a in G.adj]
    heap = [(len(adj[v]), v) for v in range(n)]
    heapq.heapify(heap)
    gone = [False] * n
    elim_degree = [0] * n
    seq = [0] * n
    slot = n - 1
    while heap:
        d, v = heapq.heappop(heap)
        if gone[v] or d != len(adj[v]):
            continue
        checkpoint()
        gone[v] = True
        elim_degree[v] = d
        seq[slot] = v
        slot -= 1
        nbrs = list(adj[v])
        for u in nbrs:
            adj[u].discard(v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                adj[a].add(b)
                adj[b].add(a)
        for u in nbrs:
            heapq.heappush(heap, (len(adj[u]), u))
        adj[v] = set()
    return Order(seq), elim_degree


def order_min_degree_elimination(G: Graph) -> Order:
    return min_degree_elimination(G)[0]


# ------------------------------------------------------------ treedepth

def _is_clique(G: Graph, verts: list[int], inside: set[int]) -> bool:
    k = len(verts)
    return all(sum(1 for u in G.adj[v] if u in inside) == k - 1 for v in verts)


def _largest_component(G: Graph, inside: set[int], sep: set[int]) -> int:
    rest = inside - sep
    if not rest:
        return 0
    return len(components(G, rest)[0])


def _neighborhood(G: Graph, comp, inside: set[int]) -> set[int]:
    cs = set(comp)
    return {u for v in comp for u in G.adj[v] if u in inside and u not in cs}


def close_separator_candidates(G: Graph, inside: set[int]) -> list[frozenset[int]]:
    """Minimal separators of the connected, non-complete graph G[inside].

    The first one is close: pick the highest-degree vertex x whose closed
    neighbourhood does not cover everything and take N(C) for the smallest
    component C of G - N[x].  The rest come from the refinement rule
    N(C) for each x in S and each component C of G - (S + N(x)).
    """
    deg = {v: sum(1 for u in G.adj[v] if u in inside) for v in inside}
    start = None
    for x in sorted(inside, key=lambda v: (-deg[v], v)):
        closed = {x} | {u for u in G.adj[x] if u in inside}
        rest = inside - closed
        if rest:
            comps = components(G, rest)
            smallest = min(comps, key=lambda c: (len(c), c[0]))
            start = frozenset(_neighborhood(G, smallest, inside))
            break
    if start is None:
        return []
    seen = {start}
    out = [start]
    for x in sorted(start):
        blocked = set(start) | {u for u in G.adj[x] if u in inside}
        for comp in components(G, inside - blocked):
            cand = frozenset(_neighborhood(G, comp, inside))
            if cand and cand not in seen:
                seen.add(cand)
                out.append(cand)
    return out


@dataclass
class TreedepthTrace:
    order: Order
    height: int


def treedepth_decomposition(G: Graph) -> TreedepthTrace:
    """Recursive separator decomposition; ``height`` is the depth of the
    resulting elimination forest."""
    seq: list[int] = []

    def by_degree(verts, inside):
        return sorted(verts, key=lambda v: (-sum(1 for u in G.adj[v] if u in inside), v))

    height = 0
    # explicit stack of (connected vertex set, depth above it); pre-order
    stack = [(set(c), 0) for c in reversed(components(G))]
    while stack:
        checkpoint()
        inside, depth = stack.pop()
        verts = sorted(inside)
        if len(verts) == 1 or _is_clique(G, verts, inside):
            seq.extend(by_degree(verts, inside))
            height = max(height, depth + len(verts))
            continue
        best = None
        for cand in close_separator_candidates(G, inside):
            key = (_largest_component(G, inside, cand), len(cand), sorted(cand))
            if best is None or key < best[0]:
                best = (key, cand)
        sep = best[1]
        seq.extend(by_degree(sep, inside))
        below = depth + len(sep)
        for comp in reversed(components(G, inside - sep)):
            stack.append((set(comp), below))
    return TreedepthTrace(Order(seq), height)


def order_treedepth_heuristic(G: Graph) -> Order:
    return treedepth_decomposition(G).order
