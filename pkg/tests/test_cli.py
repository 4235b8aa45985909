import json

import pytest

from ramsat import cli
from ramsat.graphs import parse_graph6, write_graph6


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0


def test_construct_paley(capsys):
    code, out, err = run(capsys, "construct", "paley", "--p", "13", "--show-spec")
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.n == 13 and g.edge_count() == 39
    assert "C(13; 1,3,4)" in err


def test_construct_circulant(capsys):
    code, out, _ = run(
        capsys, "construct", "circulant", "--n", "5", "--distances", "1"
    )
    assert code == 0
    assert parse_graph6(out.strip()).edge_count() == 5


def test_construct_bad_parameter(capsys):
    code, _, err = run(capsys, "construct", "paley", "--p", "15")
    assert code == cli.EXIT_ERROR
    assert "error:" in err


def test_verify_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "r4t", "--t", "5")
    assert code == 0
    path = tmp_path / "g.g6"
    path.write_text(out)
    code, out, _ = run(
        capsys, "verify", "--s", "4", "--t", "5", "--input", str(path)
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"][0]["verdict"] == "DoublySaturated"
    assert report["artifact_version"]
    assert report["config_digest"]


def test_verify_failure_witness(capsys, tmp_path):
    from ramsat.graphs import Graph

    triangle = Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2)])
    path = tmp_path / "g.g6"
    path.write_text(write_graph6(triangle) + "\n")
    code, out, _ = run(
        capsys, "verify", "--s", "3", "--t", "3", "--input", str(path)
    )
    assert code == 0
    assert json.loads(out)["results"][0]["verdict"] != "DoublySaturated"


def test_verify_empty_input(capsys, tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    code, _, err = run(
        capsys, "verify", "--s", "3", "--t", "3", "--input", str(path)
    )
    assert code == cli.EXIT_ERROR


def test_verify_garbage_input(capsys, tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("not graph6 at all\x01\n")
    code, _, err = run(
        capsys, "verify", "--s", "3", "--t", "3", "--input", str(path)
    )
    assert code == cli.EXIT_ERROR
    assert "error:" in err


def test_encode(capsys, tmp_path):
    out_path = tmp_path / "inst.cnf"
    code, out, _ = run(
        capsys, "encode", "--n", "6", "--s", "3", "--t", "3",
        "--out", str(out_path),
    )
    assert code == 0
    info = json.loads(out)
    assert info["groups"]["goodness"] == 40
    text = out_path.read_text()
    assert f"p cnf {info['num_vars']} {info['num_clauses']}" in text
    assert (tmp_path / "inst.cnf.varmap.json").exists()


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "5", "--s", "3", "--t", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert parse_graph6(lines[0]).edge_count() == 5


def test_paley_scan_command(capsys, tmp_path):
    report_path = tmp_path / "scan.json"
    code, out, _ = run(
        capsys, "paley-scan", "--s", "4", "--p-max", "50",
        "--report", str(report_path),
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["results"] == {"s": 4, "p": 13, "p_max": 50}


def test_poset_enumerate(capsys):
    code, out, _ = run(
        capsys, "poset", "--s", "3", "--t", "4", "--n", "7", "--enumerate"
    )
    assert code == 0
    results = json.loads(out)["results"]
    assert results["class_count"] > 1
    assert results["singleton_classes"] == []


def test_poset_requires_source(capsys):
    with pytest.raises(SystemExit):
        cli.main(["poset", "--s", "3", "--t", "3"])


def test_solve_command(capsys, solver_cfg, monkeypatch):
    monkeypatch.setenv("RAMSAT_SOLVER", " ".join(solver_cfg.command))
    code, out, _ = run(capsys, "solve", "--n", "5", "--s", "3", "--t", "3")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["status"] == "SAT"
    assert parse_graph6(results["graph6"]).n == 5


def test_solve_below_bound_without_solver(capsys, monkeypatch):
    # The floor answers this instance, but config discovery still runs, so
    # point the env at a dummy command.
    monkeypatch.setenv("RAMSAT_SOLVER", "/nonexistent/solver")
    code, out, _ = run(capsys, "solve", "--n", "4", "--s", "3", "--t", "3")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["status"] == "UNSAT"
    assert results["graph6"] is None


def test_enumerate_command(capsys, solver_cfg, monkeypatch):
    monkeypatch.setenv("RAMSAT_SOLVER", " ".join(solver_cfg.command))
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--s", "3", "--t", "3")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["labeled_models"] == 12
    assert results["complete"] is True
    assert len(results["classes"]) == 1


def test_search_min_command(capsys, solver_cfg, monkeypatch):
    monkeypatch.setenv("RAMSAT_SOLVER", " ".join(solver_cfg.command))
    code, out, _ = run(capsys, "search-min", "--s", "3", "--t", "3", "--n-max", "8")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["n_min"] == 5
    assert results["conditional"] is False
