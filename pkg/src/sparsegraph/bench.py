"""Benchmark harness: timed runs, quality ratios, CSV tables and statistics.

Main CSVs hold only deterministic values, so reruns with the same seed are
byte-identical.  Wall-clock times go to a ``.timings.csv`` sidecar.
"""
from __future__ import annotations

import csv
import io
import logging
import math
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from ._deadline import Timeout, deadline
from .dtf import order_from_dtf
from .flat import ALL_FLAT_CONFIGS, FlatConfig, order_flat
from .graph import EdgeListError, Graph, Order, read_edge_list
from .greedy import order_greedy_sreach, order_greedy_wreach
from .localsearch import LsBudget, local_search
from .reach import wcol_of_order
from .simple import (SimpleKind, SimpleVariant, order_min_degree_elimination, order_simple,
                     order_treedepth_heuristic)
from .uqw import UqwResult, score, uqw_ld, verify_uqw
from .uqw_tree import uqw_tree
from .uqw_wcol import default_order, uqw_mfcs, uqw_tgv

log = logging.getLogger(__name__)

ORDER_TIMEOUT = 300.0
LS_TIMEOUT = 60.0
UQW_TIMEOUT = 600.0
NA = "NA"

GROUPS = (("small", 1_000), ("medium", 10_000), ("big", 48_000), ("huge", math.inf))


def group_of(m: int) -> str:
    for name, top in GROUPS:
        if m <= top:
            return name
    raise AssertionError("unreachable")


# ------------------------------------------------------------ algorithm tables

def _simple(kind):
    return lambda G, r, seed: order_simple(G, SimpleVariant(kind, r, seed))


def _flat(cfg: FlatConfig):
    return lambda G, r, seed: order_flat(G, cfg)


WCOL_ALGORITHMS: dict[str, Callable[[Graph, int, int], Order]] = {
    "degree": _simple(SimpleKind.DEGREE_DESC),
    "degeneracy": _simple(SimpleKind.DEGENERACY),
    "random": _simple(SimpleKind.RANDOM),
    "power-degree": _simple(SimpleKind.POWER_DEGREE_DESC),
    "power-degeneracy": _simple(SimpleKind.POWER_DEGENERACY),
    "min-degree": lambda G, r, seed: order_min_degree_elimination(G),
    "treedepth": lambda G, r, seed: order_treedepth_heuristic(G),
    "greedy-wreach": lambda G, r, seed: order_greedy_wreach(G, r),
    "greedy-sreach": lambda G, r, seed: order_greedy_sreach(G, r),
    "dtf": lambda G, r, seed: order_from_dtf(G, r),
}
for _cfg in ALL_FLAT_CONFIGS:
    WCOL_ALGORITHMS[_cfg.name] = _flat(_cfg)

FLAT_NAMES = tuple(c.name for c in ALL_FLAT_CONFIGS)
BASE_WCOL = tuple(k for k in WCOL_ALGORITHMS if not k.startswith("flat:"))


def _tree(variant):
    return lambda G, A, r, seed: uqw_tree(G, A, r, variant)


def _tgv(variant):
    return lambda G, A, r, seed: uqw_tgv(G, A, r, default_order(G, r, seed), variant)


UQW_ALGORITHMS: dict[str, Callable[[Graph, frozenset, int, int], UqwResult]] = {
    "mfcs": lambda G, A, r, seed: uqw_mfcs(G, A, r, default_order(G, r, seed)),
    "new1": _tgv("new1"),
    "new2": _tgv("new2"),
    "new_ld": _tgv("new_ld"),
    "tree1": _tree("tree1"),
    "tree2": _tree("tree2"),
    "ld_it": _tree("ld_it"),
    "ld": lambda G, A, r, seed: uqw_ld(G, A, r),
}


def resolve_algorithms(spec: str | Sequence[str] | None, table: dict, default: Sequence[str]) -> list[str]:
    """'all', a comma list, or a sequence; 'flat' stands for every flat variant."""
    if spec is None:
        return list(default)
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[str] = []
    for item in (s.strip() for s in items):
        if not item:
            continue
        if item == "all":
            names = list(table)
        elif item == "flat" and table is WCOL_ALGORITHMS:
            names = list(FLAT_NAMES)
        elif item in table:
            names = [item]
        else:
            raise ValueError(f"unknown algorithm {item!r}")
        out.extend(n for n in names if n not in out)
    return out


# ------------------------------------------------------------ inputs

def bundled_corpus() -> Path:
    return Path(str(resources.files("sparsegraph") / "data" / "corpus"))


def load_graphs(path: str | Path) -> list[tuple[str, Graph]]:
    """Every readable ``*.txt``/``*.edges`` file under a directory, or one file."""
    path = Path(path)
    files = [path] if path.is_file() else sorted(
        p for p in path.iterdir() if p.suffix in (".txt", ".edges", ".tsv", ".csv"))
    out = []
    for f in files:
        try:
            out.append((f.stem, read_edge_list(f)))
        except (OSError, UnicodeDecodeError, EdgeListError) as exc:
            log.warning("skipping %s: %s", f, exc)
    return out


# ------------------------------------------------------------ records

@dataclass
class BenchRecord:
    graph: str
    n: int
    m: int
    max_degree: int
    group: str
    algorithm: str
    radius: int
    wcol: int | None
    elapsed_ms: float
    seed: int
    timeout: bool


@dataclass
class UqwRecord:
    graph: str
    n: int
    m: int
    group: str
    algorithm: str
    radius: int
    start_mode: str
    deleted: int | None
    independent: int | None
    score: int | None
    elapsed_ms: float
    seed: int
    timeout: bool


def _timed(fn, seconds):
    t0 = time.perf_counter()
    try:
        with deadline(seconds):
            value = fn()
        return value, (time.perf_counter() - t0) * 1000.0, False
    except Timeout:
        return None, (time.perf_counter() - t0) * 1000.0, True


def _wcol_job(job):
    name, G, algo, r, timeout, ls, ls_timeout, seed = job
    base = dict(graph=name, n=G.n, m=G.m, max_degree=G.max_degree(), group=group_of(G.m), radius=r, seed=seed)
    L, ms, to = _timed(lambda: WCOL_ALGORITHMS[algo](G, r, seed), timeout)
    rows = [BenchRecord(algorithm=algo, wcol=None if to else wcol_of_order(G, L, r),
                        elapsed_ms=ms, timeout=to, **base)]
    if ls:
        if to:
            rows.append(BenchRecord(algorithm=algo + "+ls", wcol=None, elapsed_ms=0.0, timeout=True, **base))
        else:
            # local search stops by itself at the deadline and keeps its best order
            t0 = time.perf_counter()
            with deadline(ls_timeout):
                L2 = local_search(G, L, r, LsBudget(seed=seed))
            ms2 = (time.perf_counter() - t0) * 1000.0
            rows.append(BenchRecord(algorithm=algo + "+ls", wcol=wcol_of_order(G, L2, r),
                                    elapsed_ms=ms + ms2, timeout=False, **base))
    return rows


def _run_jobs(fn, jobs, workers: int):
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def run_wcol_bench(graphs: Iterable[tuple[str, Graph]], algorithms: Sequence[str], radii: Sequence[int],
                   timeout: float | None = ORDER_TIMEOUT, ls: bool = False, seed: int = 0,
                   ls_timeout: float | None = LS_TIMEOUT, workers: int = 1) -> list[BenchRecord]:
    jobs = [(name, G, algo, r, timeout, ls, ls_timeout, seed)
            for name, G in graphs for algo in algorithms for r in radii]
    records = [rec for rows in _run_jobs(_wcol_job, jobs, workers) for rec in rows]
    records.sort(key=lambda x: (x.graph, x.radius, x.algorithm))
    return records


def sample_start_set(name: str, G: Graph, mode: str, seed: int) -> frozenset[int]:
    if mode == "full":
        return frozenset(range(G.n))
    if mode == "sample20":
        k = max(1, round(0.2 * G.n)) if G.n else 0
        rng = random.Random(f"{seed}:{name}")
        return frozenset(rng.sample(range(G.n), k))
    raise ValueError(f"unknown start mode {mode!r}")


def _uqw_job(job):
    name, G, algo, r, mode, timeout, seed = job
    A = sample_start_set(name, G, mode, seed)
    res, ms, to = _timed(lambda: UQW_ALGORITHMS[algo](G, A, r, seed), timeout)
    if not to and not verify_uqw(G, A, res):
        raise AssertionError(f"{algo} returned an invalid result on {name} (r={r})")
    return UqwRecord(name, G.n, G.m, group_of(G.m), algo, r, mode,
                     None if to else len(res.S), None if to else len(res.B),
                     None if to else score(G, res), ms, seed, to)


def run_uqw_bench(graphs: Iterable[tuple[str, Graph]], algorithms: Sequence[str], radii: Sequence[int],
                  start_mode: str = "full", timeout: float | None = UQW_TIMEOUT, seed: int = 0,
                  workers: int = 1) -> list[UqwRecord]:
    jobs = [(name, G, algo, r, start_mode, timeout, seed)
            for name, G in graphs for algo in algorithms for r in radii]
    records = _run_jobs(_uqw_job, jobs, workers)
    records.sort(key=lambda x: (x.graph, x.radius, x.start_mode, x.algorithm))
    return records


# ------------------------------------------------------------ tables

def _fmt(x) -> str:
    if x is None:
        return NA
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, float):
        return NA if math.isnan(x) else f"{x:.4f}"
    return str(x)


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(x) for x in row])
    return buf.getvalue()


WCOL_COLUMNS = ("graph", "n", "m", "max_degree", "group", "algorithm", "radius", "wcol", "seed", "timeout")
UQW_COLUMNS = ("graph", "n", "m", "group", "algorithm", "radius", "start_mode", "deleted",
               "independent", "score", "seed", "timeout")


def records_csv(records, columns) -> str:
    return to_csv(columns, ([getattr(r, c) for c in columns] for r in records))


def timings_csv(records) -> str:
    cols = ["graph", "algorithm", "radius"] + (["start_mode"] if records and hasattr(records[0], "start_mode") else [])
    return to_csv(cols + ["elapsed_ms"],
                  ([getattr(r, c) for c in cols] + [f"{r.elapsed_ms:.3f}"] for r in records))


def read_baseline(path: str | Path) -> dict[tuple[str, int], int]:
    """CSV with columns graph, radius, wcol."""
    out = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            if row.get("wcol") in (None, "", NA):
                continue
            key = (row["graph"], int(row["radius"]))
            val = int(row["wcol"])
            out[key] = min(val, out.get(key, val))
    return out


def best_known(records: Sequence[BenchRecord], baseline: dict | None = None) -> dict[tuple[str, int], int]:
    best = dict(baseline or {})
    for rec in records:
        if rec.wcol is not None:
            key = (rec.graph, rec.radius)
            best[key] = min(rec.wcol, best.get(key, rec.wcol))
    return best


def ratio_table(records: Sequence[BenchRecord], baseline: dict | None = None):
    """Rows (graph, radius, {algorithm: ratio or None}) plus the algorithm list."""
    best = best_known(records, baseline)
    algos = sorted({r.algorithm for r in records})
    cells: dict[tuple[str, int], dict[str, float | None]] = defaultdict(dict)
    for rec in records:
        key = (rec.graph, rec.radius)
        cells[key][rec.algorithm] = None if rec.wcol is None else rec.wcol / best[key]
    rows = [(g, r, cells[(g, r)]) for g, r in sorted(cells)]
    return algos, rows


def ratio_csv(records, baseline=None) -> str:
    algos, rows = ratio_table(records, baseline)
    return to_csv(["graph", "radius", *algos], ([g, r, *(c.get(a) for a in algos)] for g, r, c in rows))


def mean_ratios(records, baseline=None) -> dict[tuple[str, int], float]:
    """Mean ratio per (algorithm, radius) over graphs where the run finished."""
    _, rows = ratio_table(records, baseline)
    acc: dict[tuple[str, int], list[float]] = defaultdict(list)
    for _, r, cell in rows:
        for a, v in cell.items():
            if v is not None:
                acc[(a, r)].append(v)
    return {k: sum(v) / len(v) for k, v in acc.items()}


def group_summary_csv(records, baseline=None) -> str:
    _, rows = ratio_table(records, baseline)
    group = {r.graph: r.group for r in records}
    acc: dict[tuple[str, str, int], list[float]] = defaultdict(list)
    timeouts: dict[tuple[str, str, int], int] = defaultdict(int)
    for g, r, cell in rows:
        for a, v in cell.items():
            key = (group[g], a, r)
            if v is None:
                timeouts[key] += 1
            else:
                acc[key].append(v)
    keys = sorted(set(acc) | set(timeouts), key=lambda k: ([n for n, _ in GROUPS].index(k[0]), k[1], k[2]))
    return to_csv(["group", "algorithm", "radius", "mean_ratio", "graphs", "timeouts"],
                  ([*k, (sum(acc[k]) / len(acc[k])) if acc[k] else None, len(acc[k]), timeouts[k]] for k in keys))


def flat_table(records, baseline=None):
    """Mean ratio of every flat variant per radius and overall."""
    means = mean_ratios(records, baseline)
    radii = sorted({r.radius for r in records})
    rows = []
    for name in FLAT_NAMES:
        vals = [means.get((name, r)) for r in radii]
        done = [v for v in vals if v is not None]
        rows.append((name, vals, sum(done) / len(done) if done else None))
    return radii, rows


def flat_csv(records, baseline=None) -> str:
    radii, rows = flat_table(records, baseline)
    return to_csv(["variant", *(f"r{r}" for r in radii), "mean"], ([n, *vals, m] for n, vals, m in rows))


def flat_reversal_rows(records, baseline=None):
    """(root, inner, unreversed mean, reversed mean, reversed >= unreversed)."""
    _, rows = flat_table(records, baseline)
    mean = {n: m for n, _, m in rows}
    out = []
    for cfg in ALL_FLAT_CONFIGS:
        if cfg.reversed:
            continue
        fwd = mean[cfg.name]
        rev = mean[FlatConfig(cfg.root_choice, cfg.inner_order, True).name]
        ge = None if fwd is None or rev is None else rev >= fwd
        out.append((int(cfg.root_choice), cfg.inner_order.value, fwd, rev, ge))
    return out


def flat_reversal_csv(records, baseline=None) -> str:
    return to_csv(["root", "inner", "unreversed_mean", "reversed_mean", "reversed_ge_unreversed"],
                  flat_reversal_rows(records, baseline))


def uqw_totals(records: Sequence[UqwRecord]):
    """Column sums per (radius, algorithm, start mode); NA when any run timed out."""
    acc: dict[tuple[int, str, str], list[UqwRecord]] = defaultdict(list)
    for rec in records:
        acc[(rec.radius, rec.algorithm, rec.start_mode)].append(rec)
    rows = []
    for key in sorted(acc):
        recs = acc[key]
        if any(r.timeout for r in recs):
            rows.append((*key, None, None, None, len(recs), sum(r.timeout for r in recs)))
        else:
            rows.append((*key, sum(r.deleted for r in recs), sum(r.independent for r in recs),
                         sum(r.score for r in recs), len(recs), 0))
    return rows


def uqw_totals_csv(records) -> str:
    return to_csv(["radius", "algorithm", "start_mode", "deleted", "independent", "score", "graphs", "timeouts"],
                  uqw_totals(records))


# ------------------------------------------------------------ statistics

def log_pearson(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    """Pearson correlation of log-transformed values; None if undefined."""
    x = np.log(np.asarray(xs, dtype=float))
    y = np.log(np.asarray(ys, dtype=float))
    if len(x) < 2 or np.ptp(x) == 0 or np.ptp(y) == 0:
        return None
    return float(np.corrcoef(x, y)[0, 1])


def stats_columns(records: Sequence[BenchRecord]) -> tuple[list[str], dict[str, list[float]]]:
    """Per graph: n, m, average degree, max degree and best wcol per radius."""
    graphs = sorted({r.graph for r in records})
    info = {r.graph: r for r in records}
    best = best_known(records)
    radii = sorted({r.radius for r in records})
    cols: dict[str, list[float]] = {"n": [], "m": [], "avg_degree": [], "max_degree": []}
    for r in radii:
        cols[f"wcol_{r}"] = []
    keep = []
    for g in graphs:
        rec = info[g]
        vals = {"n": rec.n, "m": rec.m, "avg_degree": 2 * rec.m / rec.n if rec.n else 0.0,
                "max_degree": rec.max_degree}
        for r in radii:
            vals[f"wcol_{r}"] = best.get((g, r), 0)
        if all(v > 0 for v in vals.values()):
            keep.append(g)
            for k, v in vals.items():
                cols[k].append(float(v))
    return keep, cols


def compute_stats(records: Sequence[BenchRecord]) -> tuple[list[str], list[list[float | None]]]:
    graphs, cols = stats_columns(records)
    if len(graphs) < 3:
        raise ValueError("need at least 3 graphs with positive measures for correlations")
    names = list(cols)
    matrix = [[log_pearson(cols[a], cols[b]) for b in names] for a in names]
    return names, matrix


def stats_csv(records) -> str:
    names, matrix = compute_stats(records)
    return to_csv(["", *names], ([a, *row] for a, row in zip(names, matrix)))


def read_wcol_records(path: str | Path) -> list[BenchRecord]:
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            out.append(BenchRecord(
                graph=row["graph"], n=int(row["n"]), m=int(row["m"]), max_degree=int(row["max_degree"]),
                group=row["group"], algorithm=row["algorithm"], radius=int(row["radius"]),
                wcol=None if row["wcol"] == NA else int(row["wcol"]), elapsed_ms=0.0,
                seed=int(row["seed"]), timeout=row["timeout"] == "1"))
    return out


def output_paths(output: str | Path, kinds: Iterable[str]) -> dict[str, Path]:
    base = Path(output)
    stem = base.with_suffix("") if base.suffix == ".csv" else base
    out = {"main": base}
    for k in kinds:
        out[k] = stem.with_name(f"{stem.name}.{k}.csv")
    return out
