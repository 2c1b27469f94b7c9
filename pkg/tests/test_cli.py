import json

import pytest

from nlchroma.cli import main, parse_graph
from nlchroma.graph import complete, cycle, join, mycielski, path


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


@pytest.mark.parametrize("argv,want", [
    (["path", "10"], "chi_nl=4"),
    (["graph6", "Bw"], "chi_nl=3"),
    (["cycle", "4"], "chi_nl=4"),
    (["Bw"], "chi_nl=3"),
])
def test_compute(capsys, argv, want):
    code, out = run(capsys, "compute", *argv)
    assert code == 0 and out.out.splitlines()[0] == want


def test_compute_records(capsys):
    code, out = run(capsys, "compute", "--format", "records", "star", "4")
    rec = json.loads(out.out)
    assert code == 0 and rec["chi_nl"] == 5 and rec["rule"] == "complete-multipartite"


def test_compute_indeterminate(capsys):
    code, out = run(capsys, "compute", "--budget-nodes", "1", "gk", "5")
    assert code == 3 and "indeterminate" in out.out


@pytest.mark.parametrize("argv", [["path"], ["blob", "3"], ["path", "x"], ["path", "3", "4"]])
def test_compute_parse_errors(capsys, argv):
    code, out = run(capsys, "compute", *argv)
    assert code == 2 and "error" in out.err


@pytest.mark.parametrize("argv,code,want", [
    (["cycle", "4", "0 1 0 1"], 1, "rejected: clash"),
    (["cycle", "5", "0 1 0 1 2"], 0, "accepted"),
    (["complete", "2", "0 0"], 1, "rejected: not-proper"),
    (["Bw", "0 1 2"], 0, "accepted"),
])
def test_verify(capsys, argv, code, want):
    got, out = run(capsys, "verify", *argv)
    assert got == code and out.out.startswith(want)


def test_verify_length_mismatch(capsys):
    code, _ = run(capsys, "verify", "cycle", "4", "0 1 2")
    assert code == 2


def test_generate(capsys, tmp_path):
    side = tmp_path / "g3.txt"
    code, out = run(capsys, "generate", "gk", "3", "--sidecar", str(side))
    assert code == 0 and len(out.out.split()) == 1
    g = parse_graph([out.out.strip()])
    assert (g.n, g.m) == (9, 12)
    assert len(side.read_text().splitlines()) == 9
    _, out = run(capsys, "generate", "mycielski", "cycle", "5")
    assert parse_graph([out.out.strip()]) == mycielski(cycle(5))
    _, out = run(capsys, "generate", "join", "path", "3", "path", "3")
    assert parse_graph([out.out.strip()]) == join(path(3), path(3))


def test_generate_is_deterministic(capsys):
    _, a = run(capsys, "generate", "product", "path", "3", "cycle", "4")
    _, b = run(capsys, "generate", "product", "path", "3", "cycle", "4")
    assert a.out == b.out


def test_family_specs():
    assert parse_graph(["union", "complete", "2", "complete", "2"]).m == 2
    assert parse_graph(["multipartite", "2", "3"]).m == 6
    assert parse_graph(["join", "multipartite", "1", "1", "complete", "1"]) == complete(3)
    assert parse_graph(["split", "2", "3"]).m == 1 + 6


def test_census_all(capsys):
    code, out = run(capsys, "census", "4", "all")
    assert code == 0 and "VIOLATION" not in out.out


def test_census_single_check(capsys, tmp_path):
    dest = tmp_path / "report.jsonl"
    code, out = run(capsys, "census", "6", "extremal-n", "--output", str(dest), "--format", "records")
    lines = out.out.splitlines()
    assert code == 0 and len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["check"] == "extremal-n" and rec["violations"] == []
    assert dest.read_text().splitlines() == lines


def test_census_config_and_unknown(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 5, "workers": 1, "checks": ["counting-bounds"]}))
    code, out = run(capsys, "census", "3", "--config", str(cfg))
    assert code == 0 and "counting-bounds" in out.out
    code, out = run(capsys, "census", "3", "bogus")
    assert code == 2


def test_batch(capsys, tmp_path, monkeypatch):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("Bw\nC~\nnot-graph6\n")
    monkeypatch.setenv("NLCHROMA_WORKERS", "1")
    code, out = run(capsys, "batch", "--format", "records", str(corpus))
    recs = [json.loads(line) for line in out.out.splitlines()]
    assert code == 2
    assert [r["line"] for r in recs] == [1, 2, 3]
    assert recs[0]["chi_nl"] == 3 and recs[1]["chi_nl"] == 4 and "error" in recs[2]


def test_batch_clean(capsys, tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("Bw\nBg\n")
    code, out = run(capsys, "batch", "--workers", "2", str(corpus))
    assert code == 0 and "chi_nl=3" in out.out
