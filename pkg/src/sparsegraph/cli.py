"""Command line entry point: ``sparsegraph {wcol,uqw,gen-lb,verify,stats}``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench
from .graph import parse_order, read_edge_list, serialize_edge_list
from .lowerbound import LbParameterError, check_lb_properties, generate_lb
from .reach import OracleLimitError, col_of_order, exact_wcol, wcol_of_order
from .uqw import UqwResult, score, verify_uqw


def _radii(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("radii must be positive integers")
    return out


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _input(args) -> list:
    graphs = bench.load_graphs(args.input or bench.bundled_corpus())
    if not graphs:
        raise SystemExit("no readable graphs found")
    return graphs


def cmd_wcol(args) -> int:
    algos = bench.resolve_algorithms(args.algorithms, bench.WCOL_ALGORITHMS, list(bench.WCOL_ALGORITHMS))
    records = bench.run_wcol_bench(_input(args), algos, args.radius, args.timeout, args.local_search,
                                   args.seed, args.ls_timeout, args.jobs)
    baseline = bench.read_baseline(args.baseline) if args.baseline else None
    paths = bench.output_paths(args.output, ["ratios", "groups", "timings", "flat", "flat_reversal"])
    _write(paths["main"], bench.records_csv(records, bench.WCOL_COLUMNS))
    _write(paths["ratios"], bench.ratio_csv(records, baseline))
    _write(paths["groups"], bench.group_summary_csv(records, baseline))
    _write(paths["timings"], bench.timings_csv(records))
    if all(name in algos for name in bench.FLAT_NAMES):
        _write(paths["flat"], bench.flat_csv(records, baseline))
        _write(paths["flat_reversal"], bench.flat_reversal_csv(records, baseline))
        for root, inner, fwd, rev, ge in bench.flat_reversal_rows(records, baseline):
            print(f"flat:{root}:{inner}: reversed {bench._fmt(rev)} vs unreversed {bench._fmt(fwd)}"
                  f" -> reversed >= unreversed: {ge}")
    print(f"wrote {len(records)} rows to {paths['main']}")
    return 0


def cmd_uqw(args) -> int:
    algos = bench.resolve_algorithms(args.algorithms, bench.UQW_ALGORITHMS, list(bench.UQW_ALGORITHMS))
    records = bench.run_uqw_bench(_input(args), algos, args.radius, args.start_mode, args.timeout,
                                  args.seed, args.jobs)
    paths = bench.output_paths(args.output, ["totals", "timings"])
    _write(paths["main"], bench.records_csv(records, bench.UQW_COLUMNS))
    _write(paths["totals"], bench.uqw_totals_csv(records))
    _write(paths["timings"], bench.timings_csv(records))
    print(f"wrote {len(records)} rows to {paths['main']}")
    return 0


def cmd_gen_lb(args) -> int:
    try:
        inst = generate_lb(args.k, args.r, args.mprime, args.truncate_depth)
    except LbParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = Path(args.output)
    _write(out, serialize_edge_list(inst.graph))
    _write(out.with_name(out.name + ".parent"), inst.parent_sidecar())
    print(f"G({args.k},{args.r},{args.mprime}): n={inst.graph.n} m={inst.graph.m} c={inst.c} "
          f"levels={inst.levels}{' (truncated)' if inst.truncated else ''}")
    if args.check:
        rep = check_lb_properties(inst)
        for key, val in vars(rep).items():
            if key != "claim_failures":
                print(f"  {key}: {val}")
    return 0


def cmd_verify(args) -> int:
    G = read_edge_list(args.input)
    ok = True
    for r in args.radius:
        if args.order:
            L = parse_order(G, Path(args.order).read_text(encoding="utf-8"))
            print(f"r={r} wcol={wcol_of_order(G, L, r)} col={col_of_order(G, L, r)}")
        if args.uqw:
            S, B = _read_uqw(G, Path(args.uqw).read_text(encoding="utf-8"))
            A = frozenset(range(G.n))
            if args.start_set:
                A = frozenset(G.vertex_of(int(t)) for t in Path(args.start_set).read_text().split())
            res = UqwResult(S, B, r, A)
            valid = verify_uqw(G, A, res)
            ok = ok and valid
            print(f"r={r} valid={valid} |S|={len(S)} |B|={len(B)}"
                  + (f" score={score(G, res)}" if valid else ""))
        if args.exact:
            try:
                val, _ = exact_wcol(G, r, args.exact_limit)
                print(f"r={r} exact wcol={val}")
            except OracleLimitError as exc:
                print(f"r={r} exact: {exc}")
    return 0 if ok else 1


def _read_uqw(G, text: str):
    S, B = frozenset(), frozenset()
    for line in text.splitlines():
        head, _, rest = line.partition(":")
        ids = frozenset(G.vertex_of(int(t)) for t in rest.split())
        if head.strip() == "S":
            S = ids
        elif head.strip() == "B":
            B = ids
    return S, B


def cmd_stats(args) -> int:
    records = bench.read_wcol_records(args.input)
    text = bench.stats_csv(records)
    if args.output:
        _write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sparsegraph", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, radii, timeout, output):
        sp.add_argument("--input", help="edge-list file or directory (default: bundled corpus)")
        sp.add_argument("--radius", type=_radii, default=_radii(radii), help="e.g. 1,2,3 or 1-5")
        sp.add_argument("--algorithms", help="comma list, 'all', or 'flat' for all flat variants")
        sp.add_argument("--timeout", type=float, default=timeout, help="seconds per run")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--output", default=output)
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    w = sub.add_parser("wcol", help="order heuristics and quality ratios")
    common(w, "1-5", bench.ORDER_TIMEOUT, "wcol.csv")
    w.add_argument("--local-search", action="store_true", help="also report each order after local search")
    w.add_argument("--ls-timeout", type=float, default=bench.LS_TIMEOUT)
    w.add_argument("--baseline", help="CSV of prior best values (graph,radius,wcol)")
    w.set_defaults(func=cmd_wcol)

    u = sub.add_parser("uqw", help="scattered-set algorithms")
    common(u, "2-5", bench.UQW_TIMEOUT, "uqw.csv")
    u.add_argument("--start-mode", choices=("full", "sample20"), default="full")
    u.set_defaults(func=cmd_uqw)

    g = sub.add_parser("gen-lb", help="generate a lower-bound graph")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--mprime", type=int, required=True)
    g.add_argument("--truncate-depth", type=int, help="cap the number of tree levels")
    g.add_argument("--output", default="lb.txt")
    g.add_argument("--check", action="store_true", help="also check structure, path claim and scattered-set bound")
    g.set_defaults(func=cmd_gen_lb)

    v = sub.add_parser("verify", help="evaluate an order or check a scattered-set result")
    v.add_argument("--input", required=True)
    v.add_argument("--radius", type=_radii, default=[2])
    v.add_argument("--order", help="one vertex label per line, earliest first")
    v.add_argument("--uqw", help="file with 'S: ...' and 'B: ...' lines")
    v.add_argument("--start-set", help="labels of A (default: all vertices)")
    v.add_argument("--exact", action="store_true", help="brute-force wcol on tiny graphs")
    v.add_argument("--exact-limit", type=int, default=9)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="log-log correlations from a wcol CSV")
    s.add_argument("--input", required=True)
    s.add_argument("--output")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
