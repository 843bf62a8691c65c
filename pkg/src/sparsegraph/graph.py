"""Immutable undirected graphs, vertex orders and basic traversals."""
from __future__ import annotations

import heapq
from bisect import bisect_left
from collections import deque
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

COMMENT_PREFIXES = ("#", "%")


class EdgeListError(ValueError):
    """Raised for a malformed line in an edge-list file."""

    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno


class Graph:
    """Simple undirected graph on dense ids ``0..n-1``.

    ``labels[i]`` is the original label of internal vertex ``i``.  Adjacency
    lists are sorted tuples.  Instances are never mutated after construction.
    """

    __slots__ = ("_adj", "_labels", "_index", "_m")

    def __init__(self, adj: Sequence[Iterable[int]], labels: Sequence[int] | None = None):
        self._adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adj)
        n = len(self._adj)
        self._labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self._labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self._index = None
        m2 = 0
        for v, nbrs in enumerate(self._adj):
            for u in nbrs:
                if u == v or not 0 <= u < n:
                    raise ValueError(f"bad neighbor {u} of {v}")
                if not self.has_edge(u, v):
                    raise ValueError(f"edge {v}-{u} is not symmetric")
            m2 += len(nbrs)
        self._m = m2 // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj, labels)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def vertex_of(self, label: int) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self._labels)}
        return self._index[label]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, nbrs in enumerate(self._adj):
            for u in nbrs:
                if v < u:
                    yield v, u

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj and self._labels == other._labels

    def __hash__(self):
        return hash((self._adj, self._labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Order:
    """A linear order of the vertices: ``at[i]`` is the vertex at position i,
    ``pos[v]`` the position of vertex v."""

    __slots__ = ("at", "pos")

    def __init__(self, sequence: Iterable[int]):
        at = tuple(sequence)
        pos = [-1] * len(at)
        for i, v in enumerate(at):
            if not 0 <= v < len(at) or pos[v] != -1:
                raise ValueError("order must be a permutation of 0..n-1")
            pos[v] = i
        self.at = at
        self.pos = tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "Order":
        return cls(range(n))

    def __len__(self):
        return len(self.at)

    def __iter__(self):
        return iter(self.at)

    def __eq__(self, other):
        return isinstance(other, Order) and self.at == other.at

    def __hash__(self):
        return hash(self.at)

    def __repr__(self):
        return f"Order({list(self.at)})"


# ---------------------------------------------------------------- edge lists

def parse_edge_list(stream: IO[bytes] | IO[str] | bytes | str) -> Graph:
    """Parse a whitespace separated edge list.

    Lines starting with ``#`` or ``%`` are comments.  Columns past the second
    are ignored (KONECT writes weights and timestamps there).  Labels are
    remapped to dense ids in increasing label order.
    """
    if isinstance(stream, (bytes, str)):
        text = stream
    else:
        text = stream.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise EdgeListError(lineno, raw, "expected two vertex labels")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, raw, "labels must be integers") from None
        if u < 0 or v < 0:
            raise EdgeListError(lineno, raw, "labels must be non-negative")
        pairs.append((u, v))
        seen.add(u)
        seen.add(v)

    labels = sorted(seen)
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph.from_edges(len(labels), ((index[u], index[v]) for u, v in pairs), labels)


def read_edge_list(path: str | Path) -> Graph:
    with open(path, "rb") as fh:
        return parse_edge_list(fh)


def serialize_edge_list(G: Graph) -> str:
    """Canonical form: one ``u v`` line per edge, u < v in original labels, sorted."""
    lab = G.labels
    rows = sorted(tuple(sorted((lab[u], lab[v]))) for u, v in G.edges())
    return "".join(f"{u} {v}\n" for u, v in rows)


def write_edge_list(G: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize_edge_list(G), encoding="utf-8")


def serialize_order(G: Graph, L: Order) -> str:
    return "".join(f"{G.labels[v]}\n" for v in L.at)


def parse_order(G: Graph, text: str) -> Order:
    seq = [G.vertex_of(int(tok)) for tok in text.split()]
    return Order(seq)


# ---------------------------------------------------------------- traversals

def bfs_distances(G: Graph, source: int, max_depth: int | None = None,
                  forbidden=frozenset()) -> dict[int, int]:
    """Distances from ``source`` in ``G - forbidden``, optionally cut at ``max_depth``."""
    dist = {source: 0}
    queue = deque([source])
    adj = G.adj
    while queue:
        x = queue.popleft()
        d = dist[x]
        if max_depth is not None and d >= max_depth:
            continue
        for y in adj[x]:
            if y not in dist and y not in forbidden:
                dist[y] = d + 1
                queue.append(y)
    return dist


def ball(G: Graph, v: int, r: int, forbidden=frozenset()) -> set[int]:
    """Closed r-neighbourhood of v in G - forbidden."""
    if v in forbidden:
        raise ValueError("center vertex is forbidden")
    return set(bfs_distances(G, v, r, forbidden))


def components(G: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of G[vertices], each a sorted list.

    Components are returned largest first, ties by smallest contained id.
    """
    allowed = None if vertices is None else set(vertices)
    pool = range(G.n) if allowed is None else sorted(allowed)
    seen: set[int] = set()
    comps = []
    for s in pool:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if y not in seen and (allowed is None or y in allowed):
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def power_graph(G: Graph, r: int) -> Graph:
    """G^r: same vertices, u~v iff 1 <= dist_G(u, v) <= r."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    if r == 1:
        return G
    adj = []
    for v in range(G.n):
        reach = bfs_distances(G, v, r)
        del reach[v]
        adj.append(reach.keys())
    return Graph(adj, G.labels)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return G[vertices] on fresh ids plus the list mapping new id -> old id."""
    old = sorted(set(vertices))
    new = {v: i for i, v in enumerate(old)}
    adj = [[new[u] for u in G.adj[v] if u in new] for v in old]
    return Graph(adj, [G.labels[v] for v in old]), old


def degeneracy_order(G: Graph) -> tuple[Order, int]:
    """Repeatedly strip a minimum-degree vertex (ties: smallest id).

    Stripped vertices fill the order from the back, so every vertex has at
    most ``d`` neighbours before it.  Returns the order and ``d``.
    """
    n = G.n
    deg = [len(a) for a in G.adj]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    seq = [0] * n
    d = 0
    slot = n - 1
    while heap:
        k, v = heapq.heappop(heap)
        if removed[v] or k != deg[v]:
            continue
        removed[v] = True
        d = max(d, k)
        seq[slot] = v
        slot -= 1
        for u in G.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return Order(seq), d


def back_degrees(G: Graph, L: Order) -> list[int]:
    """Number of neighbours of each vertex that come earlier in L."""
    pos = L.pos
    return [sum(1 for u in G.adj[v] if pos[u] < pos[v]) for v in range(G.n)]
