"""CLI behavior: outputs, exit codes, determinism, and the cache."""

import json

import pytest

from edgeideals.cli import main
from edgeideals.graph6 import graph_to_graph6
from edgeideals.graphs import Graph, cycle, path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_betti_builder(capsys):
    code, out, _ = run_cli(capsys, "betti", "--builder", "cycle:4")
    assert code == 0
    doc = json.loads(out)
    assert doc["reg"] == 2 and doc["pd"] == 2
    assert {"i": 0, "j": 2, "beta": 4} in doc["entries"]


def test_betti_power_and_oracle(capsys):
    code, out, _ = run_cli(capsys, "betti", "--builder", "cycle:5", "--power", "2")
    assert code == 0
    assert json.loads(out)["reg"] == 4
    code, out, _ = run_cli(capsys, "betti", "--builder", "path:3", "--oracle", "--multi")
    assert code == 0
    doc = json.loads(out)
    assert doc["multi"]


def test_betti_graph6_and_ideal(capsys):
    g6 = graph_to_graph6(Graph(2, [(0, 1)]))
    code, out, _ = run_cli(capsys, "betti", "--graph6", g6)
    assert code == 0
    assert json.loads(out)["entries"] == [{"beta": 1, "i": 0, "j": 2}]
    code, out, _ = run_cli(
        capsys, "betti", "--ideal", '["x0^2","x0*x1","x1^2"]', "--nvars", "2"
    )
    assert code == 0
    assert json.loads(out)["reg"] == 2


def test_exit_codes(capsys):
    code, _, err = run_cli(capsys, "betti", "--builder", "nope:3")
    assert code == 2 and "builder" in err
    code, _, err = run_cli(
        capsys, "betti", "--builder", "cycle:5", "--lattice-cap", "3"
    )
    assert code == 3 and "cap" in err
    code, _, _ = run_cli(capsys, "betti")
    assert code == 2
    code, _, _ = run_cli(capsys, "verify", "--statement", "nonsense", "--builder", "cycle:4")
    assert code == 2


def test_suspend(capsys):
    code, out, _ = run_cli(capsys, "suspend", "--builder", "path:3", "--set", "0,2")
    assert code == 0
    assert out.strip() == graph_to_graph6(Graph(4, [(0, 1), (1, 2), (1, 3)]))
    code, out, _ = run_cli(capsys, "suspend", "--builder", "cycle:4", "--all")
    assert code == 0
    assert len(out.splitlines()) == 7
    code, out, _ = run_cli(
        capsys, "suspend", "--builder", "path:3", "--set", "0,2", "--verify"
    )
    doc = json_lines(out)[0]
    assert doc["verdict"] == "pass" and doc["im_reg"]["reg"] == [2, 2]
    code, _, _ = run_cli(capsys, "suspend", "--builder", "cycle:4", "--set", "0,1")
    assert code == 2


def test_extend(capsys):
    code, out, _ = run_cli(capsys, "extend", "--builder", "path:3", "--all")
    assert code == 0
    assert len(out.splitlines()) == 7
    code, out, _ = run_cli(capsys, "extend", "--builder", "path:3", "--json")
    assert code == 0
    docs = json_lines(out)
    assert docs and all(d["invariant"] for d in docs)


def test_verify_family(capsys):
    code, out, _ = run_cli(capsys, "verify", "--statement", "froberg", "--max-n", "4")
    assert code == 0
    lines = json_lines(out)
    assert "header" in lines[0]
    assert lines[0]["header"]["caps"]["lattice_max"] > 0
    reports = lines[1:]
    assert reports and all(r["verdict"] == "pass" for r in reports)


def test_verify_statement_instances(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--statement", "main2",
        "--builder", "cycle:4", "--set", "0,2", "--kmax", "3",
    )
    assert code == 0
    assert json_lines(out)[1]["verdict"] == "pass"
    code, out, _ = run_cli(
        capsys, "verify", "--statement", "keylemma",
        "--builder", "cycle:5", "--cover", "0,1,3", "--k", "2",
    )
    assert code == 0
    assert json_lines(out)[1]["verdict"] == "pass"


def test_verify_splitting_negative_exits_one(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--statement", "splitting",
        "--ideal", '["x0^2","x0*x1","x1^2"]',
        "--part-j", '["x0^2","x1^2"]',
        "--part-k", '["x0*x1"]',
        "--nvars", "2",
    )
    assert code == 1
    rep = json_lines(out)[1]
    assert rep["verdict"] == "fail"
    assert (rep["witness"]["i"], rep["witness"]["j"]) == (1, 4)


def test_verify_colon_statement(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--statement", "colon",
        "--ideal", '["x0*x1","x1*x2","x2*x3","x3*x4","x0*x4"]',
        "--monomial", "x0", "--nvars", "5",
    )
    assert code == 0
    assert json_lines(out)[1]["verdict"] == "pass"


def test_scan_np(capsys):
    code, out, _ = run_cli(capsys, "scan", "--conjecture", "np", "--max-n", "5", "--kmax", "2")
    assert code == 0
    lines = json_lines(out)
    assert len(lines) == 2
    assert lines[1]["verdict"] == "pass"


def test_scan_empty_file(tmp_path, capsys):
    src = tmp_path / "empty.g6"
    src.write_text("")
    code, out, _ = run_cli(
        capsys, "scan", "--conjecture", "np", "--graph6-file", str(src), "--kmax", "2"
    )
    assert code == 0
    assert len(json_lines(out)) == 1  # header only


def test_scan_summary_csv(tmp_path, capsys):
    summary = tmp_path / "summary.csv"
    code, out, _ = run_cli(
        capsys, "scan", "--conjecture", "np", "--max-n", "5", "--kmax", "2",
        "--summary", str(summary),
    )
    assert code == 0
    text = summary.read_text().splitlines()
    assert text[0] == "statement,instances,pass,fail,skipped"
    assert text[1] == "np,1,1,0,0"


def test_cache_on_off_identical_bytes(tmp_path, capsys):
    cache_dir = tmp_path / "cache"
    args = ["scan", "--conjecture", "np", "--max-n", "4", "--kmax", "2"]
    _, cold, _ = run_cli(capsys, *args, "--cache-dir", str(cache_dir))
    _, warm, _ = run_cli(capsys, *args, "--cache-dir", str(cache_dir))
    _, off, _ = run_cli(capsys, *args)
    assert cold == warm == off
    assert any(cache_dir.rglob("*.json"))


def test_verify_cache_roundtrip(tmp_path, capsys):
    cache_dir = tmp_path / "vcache"
    args = ["verify", "--statement", "bounds", "--max-n", "4", "--cache-dir", str(cache_dir)]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_parallel_jobs_match_serial(capsys):
    args = ["verify", "--statement", "froberg", "--max-n", "4", "--no-cache"]
    _, serial, _ = run_cli(capsys, *args)
    _, parallel, _ = run_cli(capsys, *args, "--jobs", "2")
    assert serial == parallel


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    cache_dir = tmp_path / "envcache"
    monkeypatch.setenv("EDGEIDEALS_CACHE", str(cache_dir))
    code, out, _ = run_cli(capsys, "verify", "--statement", "bounds", "--builder", "cycle:4")
    assert code == 0
    assert any(cache_dir.rglob("*.json"))
    monkeypatch.delenv("EDGEIDEALS_CACHE")
    _, out2, _ = run_cli(capsys, "verify", "--statement", "bounds", "--builder", "cycle:4")
    assert out == out2


def test_scan_newconj2_builder(capsys):
    code, out, _ = run_cli(
        capsys, "scan", "--conjecture", "newconj2",
        "--builder", "cycle:5", "--cg", "2", "--kmax", "2",
    )
    assert code == 0
    reports = json_lines(out)[1:]
    assert reports
    assert all(r["verdict"] == "pass" for r in reports)


def test_verify_deletion_probe(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--statement", "deletion-probe", "--builder", "cycle:5"
    )
    assert code == 0
    rep = json_lines(out)[1]
    assert rep["data"]["deleted_vertex_reg"] == {str(v): 2 for v in range(5)}


def test_betti_gf2(capsys):
    code, out, _ = run_cli(capsys, "betti", "--builder", "cycle:5", "--field", "gf2")
    assert code == 0
    doc = json.loads(out)
    assert doc["field"] == "GF(2)" and doc["reg"] == 3
