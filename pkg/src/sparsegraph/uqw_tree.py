"""Distance-tree heuristics for scattered sets (variants tree1, tree2, ld_it).

The r-independent set is grown radius by radius.  Before an even radius
2j the current (2j-1)-independent centres absorb their radius-(j-1) balls,
which turns the problem into radius 2 on the quotient graph; before an odd
radius 2j+1 they absorb radius-j balls and a greedy independent set among
the centres does the rest.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ._deadline import checkpoint
from .graph import Graph, bfs_distances
from .uqw import UqwResult, greedy_independent_set_adj, power_adjacency, score

VARIANTS = ("tree1", "tree2", "ld_it")
STOP_BELOW = 4


@dataclass
class DistanceTree:
    threshold: int
    nodes: dict[str, int] = field(default_factory=dict)  # address word -> vertex

    def address_of(self, v: int) -> str:
        for w, x in self.nodes.items():
            if x == v:
                return w
        raise KeyError(v)

    def leaves(self) -> list[str]:
        return [w for w in self.nodes if w + "0" not in self.nodes and w + "1" not in self.nodes]


def build_distance_tree(G: Graph, A, threshold: int = 2, forbidden=frozenset()) -> DistanceTree:
    """Insert the vertices of A in the given order.  A new vertex walks down
    from the root, turning left at a node whose label is within
    ``threshold`` (in G - forbidden) and right otherwise."""
    A = list(A)
    if not A:
        raise ValueError("need at least one vertex")
    T = DistanceTree(threshold)
    T.nodes[""] = A[0]
    for a in A[1:]:
        near = bfs_distances(G, a, threshold, forbidden)
        w = ""
        while w in T.nodes:
            w += "0" if T.nodes[w] in near else "1"
        T.nodes[w] = a
    return T


def longest_monotone_subpath(T: DistanceTree) -> tuple[list[int], str]:
    """On the longest root-to-leaf path (ties: leftmost leaf) find the longest
    run of equal turns and return the labels along it plus 'left'/'right'.
    A path of a single node counts as a right run."""
    leaf = min(T.leaves(), key=lambda w: (-len(w), w))
    if not leaf:
        return [T.nodes[""]], "right"
    best = (0, 0)  # (start index, length) within the word
    start = 0
    for i in range(1, len(leaf) + 1):
        if i == len(leaf) or leaf[i] != leaf[start]:
            if i - start > best[1]:
                best = (start, i - start)
            start = i
    s, length = best
    addresses = [leaf[:k] for k in range(s, s + length + 1)]
    kind = "left" if leaf[s] == "0" else "right"
    return [T.nodes[w] for w in addresses], kind


def longest_right_chain(T: DistanceTree) -> list[int]:
    """Longest chain w, w1, w11, ... anywhere in T (ties: shortest start
    address, then leftmost).  Its labels are pairwise beyond the threshold."""
    best: list[str] = []
    for w in sorted(T.nodes, key=lambda x: (len(x), x)):
        if w.endswith("1"):
            continue  # not the top of its chain
        chain = [w]
        while chain[-1] + "1" in T.nodes:
            chain.append(chain[-1] + "1")
        if len(chain) > len(best):
            best = chain
    return [T.nodes[w] for w in best]


# ------------------------------------------------------------ contraction

def contract_balls(G: Graph, centers, radius: int, forbidden=frozenset()) -> tuple[Graph, dict[int, int]]:
    """Quotient of G - forbidden where each centre absorbs the vertices within
    ``radius`` (nearest centre wins, ties by smaller centre id).  Absorbed
    vertices become isolated; the centre keeps their outside edges.
    Returns the quotient (same vertex ids) and the owner map."""
    owner = {v: v for v in range(G.n)}
    if radius > 0:
        owner.update(_nearest_owner(G, sorted(centers), radius, forbidden))
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for u, v in G.edges():
        if u in forbidden or v in forbidden:
            continue
        a, b = owner[u], owner[v]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return Graph(adj, G.labels), owner


def _nearest_owner(G: Graph, centers: list[int], radius: int, forbidden) -> dict[int, int]:
    dist = {c: 0 for c in centers}
    own = {c: c for c in centers}
    q = deque(centers)
    while q:
        x = q.popleft()
        if dist[x] == radius:
            continue
        for y in G.adj[x]:
            if y in forbidden:
                continue
            if y not in dist:
                dist[y] = dist[x] + 1
                own[y] = own[x]
                q.append(y)
            elif dist[y] == dist[x] + 1 and own[x] < own[y]:
                own[y] = own[x]
    return own


# ------------------------------------------------------------ engine

@dataclass
class Candidate:
    C: frozenset[int]
    S: tuple[int, ...]


def radius_two_engine(H: Graph, A0, variant: str, plain: set[int]) -> list[Candidate]:
    """Collect (C, S) candidates; every C is 2-independent in H - S."""
    A0 = sorted(A0)
    S: list[int] = []
    cur = list(A0)
    out = []
    while True:
        checkpoint()
        forbidden = frozenset(S)
        pool = cur if variant == "tree2" else [a for a in A0 if a not in forbidden]
        if variant == "ld_it":
            C = greedy_independent_set_adj(power_adjacency(H, pool, 2, forbidden))
        elif pool:
            C = longest_right_chain(build_distance_tree(H, pool, 2, forbidden))
        else:
            C = []
        out.append(Candidate(frozenset(C), tuple(S)))
        if len(cur) < STOP_BELOW:
            break
        inside = set(cur)
        best_w, best_count = None, 1
        for w in sorted(plain - forbidden - inside):
            cnt = sum(1 for u in H.adj[w] if u in inside)
            if cnt > best_count:
                best_w, best_count = w, cnt
        if best_w is None:
            break
        S.append(best_w)
        cur = [u for u in H.adj[best_w] if u in inside]
    return out


def uqw_tree(G: Graph, A, r: int, variant: str = "tree2") -> UqwResult:
    if r < 1:
        raise ValueError("radius must be at least 1")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    A = frozenset(A)
    S: frozenset[int] = frozenset()
    cur = greedy_independent_set_adj({a: [u for u in G.adj[a] if u in A] for a in A})
    for i in range(2, r + 1):
        checkpoint()
        j = i // 2
        if i % 2:
            H, _ = contract_balls(G, cur, j, S)
            cur = greedy_independent_set_adj({c: [u for u in H.adj[c] if u in cur] for c in cur})
            continue
        H, owner = contract_balls(G, cur, j - 1, S)
        plain = {v for v in range(G.n) if owner[v] == v and v not in cur and v not in S}
        best = None
        for cand in radius_two_engine(H, cur, variant, plain):
            res = UqwResult(S | frozenset(cand.S), cand.C, i, A)
            val = score(G, res)
            if best is None or val > best[0]:
                best = (val, res)
        S, cur = best[1].S, set(best[1].B)
    return UqwResult(S, frozenset(cur), r, A)
