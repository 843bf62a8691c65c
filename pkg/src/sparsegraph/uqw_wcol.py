"""Scattered sets guided by a weak coloring order: mfcs and new1/new2/new_ld."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._deadline import checkpoint
from .graph import Graph, Order, bfs_distances
from .reach import ReachProfile, wreach_sets
from .uqw import UqwResult, greedy_scattered_set, score

TGV_VARIANTS = ("new1", "new2", "new_ld")


def default_order(G: Graph, r: int, seed: int = 0) -> Order:
    """Greedy strongly-reachable order polished by local search."""
    from .greedy import order_greedy_sreach
    from .localsearch import LsBudget, local_search

    L = order_greedy_sreach(G, r)
    return local_search(G, L, r, LsBudget(max_no_improve=max(1, 5 * G.n), seed=seed))


def conflict_graph(G: Graph, L: Order, r: int, W: ReachProfile | None = None) -> dict[int, set[int]]:
    """u ~ v iff one is weakly r-reachable from the other."""
    W = W or wreach_sets(G, L, r)
    adj: dict[int, set[int]] = {v: set() for v in range(G.n)}
    for v in range(G.n):
        for u in W[v]:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
    return adj


@dataclass
class MfcsTrace:
    deletions: int = 0
    independent: list[int] = field(default_factory=list)


def uqw_mfcs(G: Graph, A, r: int, L: Order | None = None, trace: MfcsTrace | None = None) -> UqwResult:
    from .uqw import greedy_independent_set_adj

    if r < 1:
        raise ValueError("radius must be at least 1")
    A = frozenset(A)
    L = L or default_order(G, r)
    W = wreach_sets(G, L, r)
    H = conflict_graph(G, L, r, W)
    I = greedy_independent_set_adj({a: [u for u in H[a] if u in A] for a in A})
    pos = L.pos
    rest = sorted(I, key=lambda v: -pos[v])
    S: set[int] = set()
    B: list[int] = []
    if trace is not None:
        trace.independent = list(rest)
    while rest:
        checkpoint()
        v, others = rest[0], rest[1:]
        near = bfs_distances(G, v, r, S)
        hit = [u for u in others if u in near]
        B.append(v)
        if 2 * len(hit) > len(others):
            S.update(W[v] - {v})
            rest = hit
            if trace is not None:
                trace.deletions += 1
        else:
            rest = [u for u in others if u not in near]
    return UqwResult(frozenset(S), frozenset(B), r, A)


# ------------------------------------------------------------ tgv

@dataclass
class TgvStep:
    kind: str  # "growth" or "deletion"
    vertex: int
    active_before: int
    active_after: int


@dataclass(frozen=True)
class TgvState:
    active: frozenset[int]
    S: tuple[int, ...]
    B: tuple[int, ...]


@dataclass
class TgvRun:
    threshold: Fraction
    steps: list[TgvStep]
    S_before_rollback: frozenset[int]
    result: UqwResult
    candidates: list[UqwResult]
    states: list[TgvState] = field(default_factory=list)  # only when recorded


class _TgvMachine:
    def __init__(self, G: Graph, A: frozenset[int], r: int, L: Order, W: ReachProfile, variant: str):
        self.G, self.A, self.r, self.L, self.W, self.variant = G, A, r, L, W, variant
        self.holders: dict[int, set[int]] = {}  # z -> vertices whose WReach holds z
        for v in range(G.n):
            for z in W[v]:
                self.holders.setdefault(z, set()).add(v)

    def conflicts(self, v: int, active: set[int], S: set[int]) -> set[int]:
        if self.variant == "new1":
            out = set()
            for z in self.W[v]:
                if z not in S:
                    out |= self.holders[z] & active
            return out
        return {u for u in bfs_distances(self.G, v, self.r, S) if u in active}

    def run(self, t: Fraction, record: bool = False) -> TgvRun:
        pos = self.L.pos
        active = set(self.A)
        S: list[int] = []
        B: list[int] = []
        steps: list[TgvStep] = []
        candidates: list[UqwResult] = []
        states: list[TgvState] = []
        last_growth_S = 0
        while active:
            checkpoint()
            before = len(active)
            v = min(active, key=lambda x: pos[x])
            bad = self.conflicts(v, active, set(S))
            if len(bad) <= t * len(active) or len(bad) == 1:
                B.append(v)
                active -= bad
                active.discard(v)
                steps.append(TgvStep("growth", v, before, len(active)))
                last_growth_S = len(S)
            else:
                Sset = set(S)
                count: dict[int, int] = {}
                for a in active:
                    for z in self.W[a]:
                        if z not in Sset:
                            count[z] = count.get(z, 0) + 1
                z = min(count, key=lambda x: (-count[x], x))
                S.append(z)
                active = {a for a in active if z in self.W[a]}
                active.discard(z)
                steps.append(TgvStep("deletion", z, before, len(active)))
            if record:
                states.append(TgvState(frozenset(active), tuple(S), tuple(B)))
            if self.variant == "new_ld":
                fill = greedy_scattered_set(self.G, active, self.r, frozenset(S))
                candidates.append(UqwResult.make(S, set(B) | fill, self.r, self.A))
        # trailing deletions did not help any vertex of B
        final = UqwResult.make(S[:last_growth_S], B, self.r, self.A)
        candidates.append(final)
        return TgvRun(t, steps, frozenset(S), final, candidates, states)


def tgv_runs(G: Graph, A, r: int, L: Order | None = None, variant: str = "new2",
             k_thresholds: int = 9, record: bool = False) -> list[TgvRun]:
    if r < 1:
        raise ValueError("radius must be at least 1")
    if variant not in TGV_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if k_thresholds < 1:
        raise ValueError("need at least one threshold")
    A = frozenset(A)
    L = L or default_order(G, r)
    machine = _TgvMachine(G, A, r, L, wreach_sets(G, L, r), variant)
    return [machine.run(Fraction(i, k_thresholds + 1), record) for i in range(1, k_thresholds + 1)]


def uqw_tgv(G: Graph, A, r: int, L: Order | None = None, variant: str = "new2",
            k_thresholds: int = 9) -> UqwResult:
    best = None
    for idx, run in enumerate(tgv_runs(G, A, r, L, variant, k_thresholds)):
        for res in run.candidates:
            key = (score(G, res), -len(res.S), len(res.B), -idx)
            if best is None or key > best[0]:
                best = (key, res)
    return best[1]
