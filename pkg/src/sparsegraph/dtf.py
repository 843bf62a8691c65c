"""Distance-constrained transitive-fraternal augmentations.

An arc ``x -> y`` always points from the later to the earlier endpoint, so
``y`` plays the role of a weakly reachable vertex of ``x`` and out-degrees
stay small.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from ._deadline import checkpoint
from .graph import Graph, Order, degeneracy_order


@dataclass
class DtfGraph:
    n: int
    out: list[dict[int, int]]  # out[x][y] = weight of arc x -> y
    step: int = 1
    inn: list[dict[int, int]] = field(default_factory=list, repr=False)

    @classmethod
    def from_arcs(cls, n: int, arcs, step: int = 1) -> "DtfGraph":
        D = cls(n, [dict() for _ in range(n)], step, [dict() for _ in range(n)])
        for x, y, w in arcs:
            _add(D, x, y, w)
        return D

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        for x, heads in enumerate(self.out):
            for y, w in heads.items():
                yield x, y, w

    def weight(self, x: int, y: int) -> int | None:
        return self.out[x].get(y)

    def max_out_degree(self) -> int:
        return max((len(h) for h in self.out), default=0)

    def underlying(self, labels=None) -> Graph:
        return Graph.from_edges(self.n, ((x, y) for x, y, _ in self.arcs()), labels)

    def copy(self) -> "DtfGraph":
        return DtfGraph(self.n, [dict(h) for h in self.out], self.step, [dict(t) for t in self.inn])

    def dump(self, G: Graph) -> str:
        lab = G.labels
        rows = sorted((lab[x], lab[y], w) for x, y, w in self.arcs())
        return "".join(f"{x} {y} {w}\n" for x, y, w in rows)


def _add(D: DtfGraph, x: int, y: int, w: int) -> None:
    D.out[x][y] = w
    D.inn[y][x] = w


def _oriented(G: Graph, L: Order) -> DtfGraph:
    D = DtfGraph(G.n, [dict() for _ in range(G.n)], 1, [dict() for _ in range(G.n)])
    pos = L.pos
    for u, v in G.edges():
        if pos[u] < pos[v]:
            _add(D, v, u, 1)
        else:
            _add(D, u, v, 1)
    return D


def _augment_once(D: DtfGraph, i: int) -> None:
    """Turn the (i-1)-th augmentation into the i-th, in place."""
    out, inn = D.out, D.inn

    def linked(a, b):
        return b in out[a] or a in out[b]

    # transitive: w -> v (weight b), v -> u (weight a), a + b = i
    transitive: set[tuple[int, int]] = set()
    for v in range(D.n):
        checkpoint()
        for u, a in out[v].items():
            b = i - a
            if b < 1:
                continue
            for w, wb in inn[v].items():
                if wb == b and w != u and not linked(w, u):
                    transitive.add((w, u))

    # fraternal: u -> v (weight 1), u -> w (weight i - 1)
    fraternal: set[tuple[int, int]] = set()
    for u in range(D.n):
        checkpoint()
        ones = [v for v, a in out[u].items() if a == 1]
        if not ones:
            continue
        others = [w for w, b in out[u].items() if b == i - 1]
        for v in ones:
            for w in others:
                if v == w:
                    continue
                pair = (v, w) if v < w else (w, v)
                if not linked(*pair):
                    fraternal.add(pair)

    taken = {(min(w, u), max(w, u)) for w, u in transitive}
    fraternal -= taken

    for w, u in sorted(transitive):
        _add(D, w, u, i)
    if fraternal:
        verts = sorted({x for e in fraternal for x in e})
        index = {v: k for k, v in enumerate(verts)}
        aux = Graph.from_edges(len(verts), ((index[a], index[b]) for a, b in fraternal))
        pos = degeneracy_order(aux)[0].pos
        for a, b in sorted(fraternal):
            if pos[index[a]] < pos[index[b]]:
                _add(D, b, a, i)
            else:
                _add(D, a, b, i)
    D.step = i


def dtf_steps(G: Graph, r: int) -> Iterator[DtfGraph]:
    """Yield snapshots of the augmentations 1..r."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    D = _oriented(G, degeneracy_order(G)[0])
    yield D.copy()
    for i in range(2, r + 1):
        _augment_once(D, i)
        yield D.copy()


def dtf_augment(G: Graph, r: int) -> DtfGraph:
    if r < 1:
        raise ValueError("radius must be at least 1")
    D = _oriented(G, degeneracy_order(G)[0])
    for i in range(2, r + 1):
        _augment_once(D, i)
    return D


def orient(G: Graph, L: Order) -> DtfGraph:
    """Orient every edge of G towards its L-earlier endpoint, weight 1."""
    return _oriented(G, L)


def augment(D: DtfGraph, r: int) -> DtfGraph:
    """Continue the augmentation of D up to step r (returns a copy)."""
    D = D.copy()
    for i in range(D.step + 1, r + 1):
        _augment_once(D, i)
    return D


def order_from_dtf(G: Graph, r: int) -> Order:
    return degeneracy_order(dtf_augment(G, r).underlying())[0]


@dataclass
class DtfCertificate:
    wcol: int
    max_out_degree: int
    c: int

    @property
    def bound(self) -> int:
        return (self.max_out_degree + 1) * self.c + 1

    @property
    def holds(self) -> bool:
        return self.wcol <= self.bound


def dtf_certificate(G: Graph, r: int) -> DtfCertificate:
    from .reach import wcol_of_order

    D = dtf_augment(G, r)
    L, c = degeneracy_order(D.underlying())
    return DtfCertificate(wcol_of_order(G, L, r), D.max_out_degree(), c)
