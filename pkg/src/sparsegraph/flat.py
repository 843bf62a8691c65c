"""Orders from flat (connected) decompositions."""
from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field

from ._deadline import checkpoint
from .graph import Graph, Order, components


class RootChoice(enum.IntEnum):
    MAX_PROCESSED_NEIGHBORS = 1
    MAX_DEGREE_IN_C = 2
    MAX_DEGREE_ADJACENT_TO_PROCESSED = 3


class InnerOrder(enum.Enum):
    BFS = "bfs"
    DFS = "dfs"
    SORT = "sort"


@dataclass(frozen=True)
class FlatConfig:
    root_choice: RootChoice = RootChoice.MAX_DEGREE_IN_C
    inner_order: InnerOrder = InnerOrder.SORT
    reversed: bool = False

    @property
    def name(self) -> str:
        return f"flat:{int(self.root_choice)}:{self.inner_order.value}:{int(self.reversed)}"

    @classmethod
    def parse(cls, name: str) -> "FlatConfig":
        parts = name.split(":")
        if len(parts) != 4 or parts[0] != "flat":
            raise ValueError(f"not a flat variant: {name!r}")
        return cls(RootChoice(int(parts[1])), InnerOrder(parts[2]), parts[3] == "1")


ALL_FLAT_CONFIGS = tuple(
    FlatConfig(root, inner, rev)
    for root in RootChoice
    for inner in InnerOrder
    for rev in (False, True)
)


@dataclass
class FlatPiece:
    vertices: list[int]
    root: int
    # contact vertex for each adjacent earlier piece (piece index -> vertex)
    contacts: dict[int, int] = field(default_factory=dict)
    # parent of each non-root vertex in the BFS tree the piece was cut from
    tree_parent: dict[int, int] = field(default_factory=dict)


@dataclass
class FlatDecomposition:
    pieces: list[FlatPiece]

    def piece_of(self, n: int) -> list[int]:
        owner = [-1] * n
        for i, p in enumerate(self.pieces):
            for v in p.vertices:
                owner[v] = i
        return owner


def _bfs_tree(G: Graph, root: int, inside: set[int]):
    depth = {root: 0}
    parent = {}
    q = deque([root])
    while q:
        x = q.popleft()
        for y in G.adj[x]:
            if y in inside and y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = x
                q.append(y)
    return depth, parent


def _pick_root(G: Graph, comp: list[int], inside: set[int], owner: list[int], rule: RootChoice) -> int:
    def deg_in_c(v):
        return sum(1 for u in G.adj[v] if u in inside)

    def processed_nbrs(v):
        return sum(1 for u in G.adj[v] if owner[u] >= 0)

    touching = [v for v in comp if processed_nbrs(v) > 0]
    if not touching:
        # a fresh component of G: take a vertex of maximum degree
        return min(comp, key=lambda v: (-G.degree(v), v))
    if rule is RootChoice.MAX_PROCESSED_NEIGHBORS:
        return min(comp, key=lambda v: (-processed_nbrs(v), v))
    if rule is RootChoice.MAX_DEGREE_IN_C:
        return min(comp, key=lambda v: (-deg_in_c(v), v))
    return min(touching, key=lambda v: (-deg_in_c(v), v))


def flat_decompose(G: Graph, cfg: FlatConfig = FlatConfig()) -> FlatDecomposition:
    owner = [-1] * G.n
    pieces: list[FlatPiece] = []
    # pending components of the unprocessed remainder: largest first, then smallest id
    heap = [(-len(c), c[0], c) for c in components(G)]
    heapq.heapify(heap)
    while heap:
        checkpoint()
        _, _, comp = heapq.heappop(heap)
        inside = set(comp)
        root = _pick_root(G, comp, inside, owner, cfg.root_choice)
        depth, parent = _bfs_tree(G, root, inside)

        contacts: dict[int, int] = {}
        for v in comp:
            for u in G.adj[v]:
                q = owner[u]
                if q < 0:
                    continue
                best = contacts.get(q)
                if best is None or (depth[v], v) < (depth[best], best):
                    contacts[q] = v

        keep = {root}
        for v in contacts.values():
            while v not in keep:
                keep.add(v)
                v = parent[v]
        idx = len(pieces)
        for v in keep:
            owner[v] = idx
        pieces.append(FlatPiece(
            vertices=sorted(keep),
            root=root,
            contacts=dict(sorted(contacts.items())),
            tree_parent={v: parent[v] for v in keep if v != root},
        ))
        rest = inside - keep
        if rest:
            for c in components(G, rest):
                heapq.heappush(heap, (-len(c), c[0], c))
    return FlatDecomposition(pieces)


def _inner(G: Graph, piece: FlatPiece, how: InnerOrder) -> list[int]:
    verts = piece.vertices
    if how is InnerOrder.SORT:
        return sorted(verts, key=lambda v: (-G.degree(v), v))
    inside = set(verts)
    if how is InnerOrder.BFS:
        seen = {piece.root}
        out = [piece.root]
        q = deque([piece.root])
        while q:
            x = q.popleft()
            for y in G.adj[x]:
                if y in inside and y not in seen:
                    seen.add(y)
                    out.append(y)
                    q.append(y)
        return out
    seen = set()
    out = []
    stack = [piece.root]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        out.append(x)
        for y in reversed(G.adj[x]):
            if y in inside and y not in seen:
                stack.append(y)
    return out


def order_flat(G: Graph, cfg: FlatConfig = FlatConfig()) -> Order:
    seq = []
    for piece in flat_decompose(G, cfg).pieces:
        part = _inner(G, piece, cfg.inner_order)
        if cfg.reversed:
            part.reverse()
        seq.extend(part)
    return Order(seq)
