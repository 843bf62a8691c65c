import logging

import pytest

from conftest import path, star
from sparsegraph import bench
from sparsegraph.bench import (BenchRecord, UqwRecord, compute_stats, group_of, load_graphs, log_pearson,
                               ratio_table, records_csv, resolve_algorithms, run_uqw_bench, run_wcol_bench,
                               sample_start_set, uqw_totals)
from sparsegraph.graph import Graph


@pytest.mark.parametrize("m,group", [
    (0, "small"), (1000, "small"), (1001, "medium"), (10_000, "medium"),
    (10_001, "big"), (48_000, "big"), (48_001, "huge"),
])
def test_groups(m, group):
    assert group_of(m) == group


def test_resolve_algorithms():
    table = bench.WCOL_ALGORITHMS
    assert resolve_algorithms(None, table, ["degree"]) == ["degree"]
    assert resolve_algorithms("all", table, []) == list(table)
    assert len(resolve_algorithms("flat", table, [])) == 18
    assert resolve_algorithms("dtf, degree,dtf", table, []) == ["dtf", "degree"]
    with pytest.raises(ValueError):
        resolve_algorithms("nope", table, [])
    with pytest.raises(ValueError):
        resolve_algorithms("flat", bench.UQW_ALGORITHMS, [])


def test_load_graphs_skips_bad_files(tmp_path, caplog):
    (tmp_path / "a.txt").write_text("1 2\n2 3\n")
    (tmp_path / "b.txt").write_text("1 x\n")
    (tmp_path / "notes.md").write_text("ignored")
    with caplog.at_level(logging.WARNING):
        graphs = load_graphs(tmp_path)
    assert [name for name, _ in graphs] == ["a"]
    assert "b.txt" in caplog.text
    assert load_graphs(tmp_path / "a.txt")[0][1].m == 2


def test_bundled_corpus_has_twenty_graphs(corpus):
    assert len(corpus) == 20
    assert all(G.n > 0 and G.m > 0 for _, G in corpus)


def test_star_ratios():
    recs = run_wcol_bench([("star", star(9))], list(bench.WCOL_ALGORITHMS), [2])
    algos, rows = ratio_table(recs)
    (_, _, cells), = rows
    assert min(cells.values()) == 1.0
    assert all(v >= 1.0 for v in cells.values())
    value = {r.algorithm: r.wcol for r in recs}
    for name in ["degree", "power-degree", "treedepth", "greedy-wreach", "greedy-sreach", *bench.FLAT_NAMES]:
        assert value[name] == 2, name
    # id tie-breaking lets a leaf precede the centre in these
    assert value["degeneracy"] == value["min-degree"] == 3


def test_single_algorithm_ratios_are_one(corpus):
    recs = run_wcol_bench(corpus[:4], ["greedy-sreach"], [1, 2])
    _, rows = ratio_table(recs)
    assert all(c["greedy-sreach"] == 1.0 for _, _, c in rows)


def test_local_search_rows():
    recs = run_wcol_bench([("p", path(8))], ["random"], [2], ls=True, seed=3)
    by = {r.algorithm: r.wcol for r in recs}
    assert set(by) == {"random", "random+ls"}
    assert by["random+ls"] <= by["random"]


def test_timeouts_are_recorded_as_missing():
    recs = run_wcol_bench([("p", path(50))], ["treedepth"], [2], timeout=0, ls=True)
    assert all(r.timeout and r.wcol is None for r in recs)
    assert ",NA," in records_csv(recs, bench.WCOL_COLUMNS)
    urecs = run_uqw_bench([("p", path(50))], ["new2"], [2], timeout=0)
    assert urecs[0].timeout and urecs[0].score is None
    assert uqw_totals(urecs)[0][3:6] == (None, None, None)


def test_metric_present_iff_not_timed_out(corpus):
    recs = run_wcol_bench(corpus[:3], ["degree", "dtf"], [1, 3])
    assert all((r.wcol is None) == r.timeout for r in recs)


def test_uqw_star_ld():
    rec, = run_uqw_bench([("star", star(9))], ["ld"], [2])
    assert (rec.deleted, rec.independent, rec.score) == (1, 9, 9)


def test_uqw_scattered_graph():
    G = Graph.from_edges(6, [])
    for rec in run_uqw_bench([("empty", G)], list(bench.UQW_ALGORITHMS), [3]):
        assert rec.deleted == 0 and rec.score == rec.independent == 6


def test_uqw_totals_sum_columns():
    recs = [UqwRecord("a", 5, 4, "small", "ld", 2, "full", 1, 3, 3, 1.0, 0, False),
            UqwRecord("b", 5, 4, "small", "ld", 2, "full", 2, 5, 4, 1.0, 0, False)]
    assert uqw_totals(recs) == [(2, "ld", "full", 3, 8, 7, 2, 0)]


def test_sample_start_set():
    G = path(50)
    A = sample_start_set("p", G, "sample20", 1)
    assert len(A) == 10
    assert A == sample_start_set("p", G, "sample20", 1)
    assert A != sample_start_set("p", G, "sample20", 2)
    assert sample_start_set("p", G, "full", 1) == frozenset(range(50))
    with pytest.raises(ValueError):
        sample_start_set("p", G, "half", 1)


def test_worker_pool_gives_same_csv(corpus):
    a = run_wcol_bench(corpus[:3], ["degree", "greedy-wreach"], [1, 2], workers=1)
    b = run_wcol_bench(corpus[:3], ["degree", "greedy-wreach"], [1, 2], workers=2)
    assert records_csv(a, bench.WCOL_COLUMNS) == records_csv(b, bench.WCOL_COLUMNS)


def test_baseline_lowers_best_known(tmp_path):
    recs = run_wcol_bench([("p", path(9))], ["degree"], [2])
    base = tmp_path / "base.csv"
    base.write_text("graph,radius,wcol\np,2,2\np,2,1\nq,1,NA\n")
    baseline = bench.read_baseline(base)
    assert baseline == {("p", 2): 1}
    _, rows = ratio_table(recs, baseline)
    assert rows[0][2]["degree"] == recs[0].wcol


def test_csv_round_trip(tmp_path, corpus):
    recs = run_wcol_bench(corpus[:2], ["degree"], [1, 2])
    out = tmp_path / "w.csv"
    out.write_text(records_csv(recs, bench.WCOL_COLUMNS))
    back = bench.read_wcol_records(out)
    assert records_csv(back, bench.WCOL_COLUMNS) == out.read_text()


def test_output_paths():
    p = bench.output_paths("out/wcol.csv", ["ratios"])
    assert str(p["ratios"]) == "out/wcol.ratios.csv"
    assert str(bench.output_paths("res", ["flat"])["flat"]) == "res.flat.csv"


def test_log_pearson_examples():
    assert log_pearson([1, 2, 3], [10, 20, 30]) == pytest.approx(1.0)
    assert log_pearson([1, 2, 3], [5, 5, 5]) is None


def _rec(graph, n, m, r, wcol):
    return BenchRecord(graph, n, m, 3, "small", "x", r, wcol, 0.0, 0, False)


def test_stats_matrix():
    recs = [_rec("a", 10, 20, 1, 10), _rec("b", 20, 40, 1, 20), _rec("c", 40, 70, 1, 40)]
    names, matrix = compute_stats(recs)
    i, j = names.index("n"), names.index("wcol_1")
    assert matrix[i][j] == pytest.approx(1.0)
    k = names.index("max_degree")
    assert matrix[i][k] is None
    assert "NA" in bench.stats_csv(recs)


def test_stats_need_three_graphs():
    with pytest.raises(ValueError):
        compute_stats([_rec("a", 10, 20, 1, 3), _rec("b", 20, 40, 1, 4)])
