"""Lower-bound graphs G(k, r, m') for scattered-set algorithms.

T(k, r) is a complete d-ary tree (d = m' - 1) with c = binom(k + r, r)
levels, so a leaf sits c - 1 edges below the root.  With that reading the
recursive construction, the short-path claim and the bound on |B| all fit
together; the size bound |V| >= (m' - 1)^c does not, since a tree with c
levels has fewer than d^c vertices.  ``check_lb_properties`` reports it.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

from .graph import Graph, bfs_distances, components, induced_subgraph


class LbParameterError(ValueError):
    pass


@dataclass
class LbInstance:
    graph: Graph
    parent: list[int]  # tree parent, -1 for the root
    k: int
    r: int
    mprime: int
    levels: int  # levels actually built (c unless truncated)
    truncated: bool

    @property
    def c(self) -> int:
        return comb(self.k + self.r, self.r)

    @property
    def d(self) -> int:
        return self.mprime - 1

    def depth(self, v: int) -> int:
        k = 0
        while self.parent[v] >= 0:
            v = self.parent[v]
            k += 1
        return k

    def ancestors(self, v: int) -> list[int]:
        out = []
        while self.parent[v] >= 0:
            v = self.parent[v]
            out.append(v)
        return out

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p >= 0:
                ch[p].append(v)
        return ch

    def parent_sidecar(self) -> str:
        lab = self.graph.labels
        return "".join(f"{lab[v]} {lab[p] if p >= 0 else -1}\n" for v, p in enumerate(self.parent))


class _Builder:
    def __init__(self, d: int):
        self.d = d
        self.parent: list[int] = []
        self.edges: set[tuple[int, int]] = set()

    def node(self, p: int) -> int:
        self.parent.append(p)
        return len(self.parent) - 1

    def link(self, u: int, v: int) -> None:
        self.edges.add((min(u, v), max(u, v)))

    def tree(self, p: int, levels: int, closure: bool) -> tuple[list[int], list[int]]:
        """Complete d-ary tree with the given number of levels hanging below p
        (p = -1 for a fresh root).  Returns (all nodes, deepest leaves)."""
        root = self.node(p)
        nodes, layer = [root], [root]
        anc = {root: [root]}
        for _ in range(levels - 1):
            nxt = []
            for x in layer:
                for _ in range(self.d):
                    y = self.node(x)
                    self.link(x, y)
                    anc[y] = anc[x] + [y]
                    if closure:
                        for a in anc[x]:
                            self.link(a, y)
                    nxt.append(y)
            nodes.extend(nxt)
            layer = nxt
        return nodes, layer

    def build(self, k: int, r: int, p: int, budget: int) -> tuple[list[int], list[int]]:
        """Attach G(k, r), cut to ``budget`` levels, below p.  Returns
        (all nodes, deepest leaves)."""
        levels = min(comb(k + r, r), budget)
        if k == 1:
            return self.tree(p, levels, closure=False)
        if r == 1:
            return self.tree(p, levels, closure=True)
        upper = comb(k + r - 1, r - 1)
        nodes, leaves = self.build(k, r - 1, p, budget)
        left = budget - upper
        if left <= 0:
            return nodes, leaves
        deepest = []
        for v in leaves:
            for _ in range(self.d):
                sub, sub_leaves = self.build(k - 1, r, v, left)
                for x in sub:
                    self.link(v, x)
                nodes.extend(sub)
                deepest.extend(sub_leaves)
        return nodes, deepest


def generate_lb(k: int, r: int, mprime: int, truncate_levels: int | None = None) -> LbInstance:
    if k < 1 or r < 1:
        raise LbParameterError("k and r must be at least 1")
    c = comb(k + r, r)
    if mprime <= c:
        raise LbParameterError(f"m' must exceed c = binom({k}+{r}, {r}) = {c}; got {mprime}")
    budget = c if truncate_levels is None else min(c, truncate_levels)
    if budget < 1:
        raise LbParameterError("truncate_levels must be at least 1")
    b = _Builder(mprime - 1)
    b.build(k, r, -1, budget)

    # canonical ids: breadth-first over the tree, children in creation order
    kids: list[list[int]] = [[] for _ in b.parent]
    for v, p in enumerate(b.parent):
        if p >= 0:
            kids[p].append(v)
    order = [0]
    for x in order:
        order.extend(kids[x])
    new = {old: i for i, old in enumerate(order)}
    parent = [-1] * len(order)
    for old, p in enumerate(b.parent):
        if p >= 0:
            parent[new[old]] = new[p]
    G = Graph.from_edges(len(order), ((new[u], new[v]) for u, v in b.edges))
    return LbInstance(G, parent, k, r, mprime, budget, budget < c)


# ------------------------------------------------------------ checks

def max_independent_set_size(adj: list[int]) -> int:
    """Exact independence number of a graph given as neighbour bitmasks."""
    n = len(adj)
    full = (1 << n) - 1
    cache: dict[int, int] = {}

    def solve(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in cache:
            return cache[mask]
        # vertices of degree <= 1 inside mask can always be taken
        best_v, best_deg = -1, -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = bin(adj[v] & mask).count("1")
            if deg <= 1:
                res = 1 + solve(mask & ~(adj[v] | low))
                cache[mask] = res
                return res
            if deg > best_deg:
                best_v, best_deg = v, deg
        bit = 1 << best_v
        res = max(solve(mask & ~bit), 1 + solve(mask & ~(adj[best_v] | bit)))
        cache[mask] = res
        return res

    return solve(full)


def scattered_number(G: Graph, radius: int, removed=frozenset()) -> int:
    """Largest radius-independent set of G - removed."""
    keep = [v for v in range(G.n) if v not in removed]
    total = 0
    for comp in components(G, keep):
        local = {v: i for i, v in enumerate(comp)}
        masks = []
        for v in comp:
            m = 0
            for u in bfs_distances(G, v, radius, removed):
                if u != v and u in local:
                    m |= 1 << local[u]
            masks.append(m)
        total += max_independent_set_size(masks)
    return total


@dataclass
class LbReport:
    edges_ancestral: bool
    levels_ok: bool
    branching_ok: bool
    size_bound: int  # (m' - 1)^c
    size_ok: bool | None  # None on truncated instances
    claim_ok: bool
    claim_failures: list[tuple[int, int]] = field(default_factory=list)
    diameter_ok: bool = True
    property_c_ok: bool | None = None
    property_c_worst: tuple[int, int, int] | None = None  # (|Z|, max |B|, bound)
    wcol_ok: bool | None = None

    @property
    def invariants_ok(self) -> bool:
        return self.edges_ancestral and self.levels_ok and self.branching_ok and self.size_ok is not False


def check_lb_properties(inst: LbInstance, exhaustive_limit: int = 60, subtree_samples: int = 50,
                        seed: int = 0) -> LbReport:
    G = inst.graph
    n = G.n
    anc_sets = [set(inst.ancestors(v)) for v in range(n)]

    edges_ancestral = all(u in anc_sets[v] or v in anc_sets[u] for u, v in G.edges())
    depths = [len(anc_sets[v]) for v in range(n)]
    kids = inst.children()
    leaves = [v for v in range(n) if not kids[v]]
    levels_ok = max(depths) + 1 == inst.levels and all(depths[v] == inst.levels - 1 for v in leaves)
    branching_ok = all(len(kids[v]) in (0, inst.d) for v in range(n))
    bound = inst.d ** inst.c
    size_ok = None if inst.truncated else n >= bound

    failures = []
    for v in range(n):
        path = [v, *inst.ancestors(v)]
        allowed = set(path)
        forbidden = frozenset(set(range(n)) - allowed)
        dist = bfs_distances(G, v, inst.r, forbidden)
        for u in path[1:]:
            if u not in dist:
                failures.append((v, u))

    rng = random.Random(seed)
    roots = list(range(n)) if n <= subtree_samples else rng.sample(range(n), subtree_samples)
    diameter_ok = True
    for top in roots:
        sub = [top]
        for x in sub:
            sub.extend(kids[x])
        H, _ = induced_subgraph(G, sub)
        if any(len(bfs_distances(H, s)) < H.n or max(bfs_distances(H, s).values()) > 2 * inst.r
               for s in range(H.n)):
            diameter_ok = False
            break

    report = LbReport(edges_ancestral, levels_ok, branching_ok, bound, size_ok,
                      not failures, failures, diameter_ok)

    if n <= exhaustive_limit:
        ok = True
        worst = None
        for z in range(3):
            best = 0
            for Z in itertools.combinations(range(n), z):
                best = max(best, scattered_number(G, 2 * inst.r, frozenset(Z)))
            limit = z * inst.mprime + 1
            if worst is None or best - limit > worst[1] - worst[2]:
                worst = (z, best, limit)
            ok = ok and best <= limit
        report.property_c_ok = ok
        report.property_c_worst = worst
    if n <= 9:
        from .reach import exact_wcol

        report.wcol_ok = exact_wcol(G, inst.r)[0] == inst.c
    return report
