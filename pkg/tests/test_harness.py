import pytest

from nlchroma import harness
from nlchroma.graph import Graph, to_graph6


def test_enumerate_counts():
    assert sum(1 for _ in harness.enumerate_labeled(3)) == 8
    assert sum(1 for _ in harness.enumerate_labeled(1)) == 1
    connected = sum(1 for _ in harness.enumerate_labeled(4, connected_only=True))
    disconnected = sum(1 for g in harness.enumerate_labeled(4) if not g.is_connected())
    assert connected == 38 == 64 - disconnected


def test_enumerate_order_and_guard():
    masks = [g.edge_mask() for g in harness.enumerate_labeled(3)]
    assert masks == sorted(masks)
    with pytest.raises(ValueError):
        next(harness.enumerate_labeled(8))


def test_chain_inequalities_n5():
    (rep,) = harness.run_census(5, ["chain-inequalities"])
    assert rep.instances > 0 and rep.violations == []


def test_extremal_n_at_6():
    (rep,) = harness.run_census(6, ["extremal-n"])
    assert rep.instances == 2 ** 15 + 1024 + 64 + 8 and rep.violations == []


def test_diam4_n7_sample():
    (rep,) = harness.run_census(7, ["diam4-upper"], n7_sample=400)
    assert "n=7" in rep.population and "seed 0" in rep.population
    assert rep.instances > 0 and rep.violations == []


def test_unknown_check():
    with pytest.raises(KeyError):
        harness.run_census(3, ["no-such-check"])


def test_every_theorem_registered():
    assert harness.unregistered_theorems() == []


def test_violation_is_reported_not_raised(monkeypatch):
    check = harness.CHECKS["diam4-upper"]
    broken = harness.Check(check.check_id, check.theorems, per_graph=lambda p: "forced" if p.g.n == 3 else None)
    monkeypatch.setitem(harness.CHECKS, "diam4-upper", broken)
    (rep,) = harness.run_census(3, ["diam4-upper"])
    assert rep.instances == 8 and len(rep.violations) == 8
    assert rep.violations[0] == {"graph6": to_graph6(Graph.from_mask(3, 0)), "detail": "forced"}


def test_report_deterministic_across_workers():
    a = harness.run_census(4, ["counting-bounds", "union-clauses"], seed=3, workers=1)
    b = harness.run_census(4, ["counting-bounds", "union-clauses"], seed=3, workers=2)
    assert harness.report_lines(a, timing=False) == harness.report_lines(b, timing=False)


def test_summary_table_lists_checks():
    reps = harness.run_census(3, ["counting-bounds"])
    table = harness.summary_table(reps)
    assert "counting-bounds" in table and "all labelled graphs n=1..3" in table


def test_ingest_corpus(tmp_path):
    good = tmp_path / "good.g6"
    good.write_text("Bw\nBg\n@\n")
    assert [g.n for _, g, _ in harness.ingest_corpus(good)] == [3, 3, 1]
    bad = tmp_path / "bad.g6"
    bad.write_text("Bw\nB\n\nBg\n")
    items = list(harness.ingest_corpus(bad))
    assert [line for line, g, err in items if g is not None] == [1, 4]
    assert [(line, err is not None) for line, g, err in items if g is None] == [(2, True)]
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert list(harness.ingest_corpus(empty)) == []
