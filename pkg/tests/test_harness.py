import pytest

from ramsat import canon, cnf, harness, saturation
from ramsat.cnf import CnfFormula
from ramsat.graphs import Graph
from ramsat.harness import (
    SolverConfig,
    SolverError,
    Status,
    UnknownResult,
    run_solver,
)


class TestSolverConfig:
    def test_from_json_file(self, tmp_path):
        p = tmp_path / "solver.json"
        p.write_text('{"solver_cmd": "varisat {dimacs}", "time_limit_s": 10}')
        cfg = SolverConfig.from_file(p)
        assert cfg.command == ["varisat", "{dimacs}"]
        assert cfg.time_limit == 10.0

    def test_from_keyvalue_file(self, tmp_path):
        p = tmp_path / "solver.cfg"
        p.write_text("# comment\nsolver_cmd = mysolver -q\ntime_limit_s = 5\n")
        cfg = SolverConfig.from_file(p)
        assert cfg.command == ["mysolver", "-q"]
        assert cfg.time_limit == 5.0

    def test_missing_command(self, tmp_path):
        p = tmp_path / "solver.json"
        p.write_text("{}")
        with pytest.raises(ValueError):
            SolverConfig.from_file(p)

    def test_env_discovery(self, monkeypatch):
        monkeypatch.setenv(harness.SOLVER_ENV, "mysolver --flag")
        cfg = SolverConfig.discover()
        assert cfg.command == ["mysolver", "--flag"]

    def test_bad_limits(self):
        with pytest.raises(ValueError):
            SolverConfig(command=["x"], time_limit=0)
        with pytest.raises(ValueError):
            SolverConfig(command=[])


class TestRunSolver:
    def test_trivial_sat(self, solver_cfg):
        f = CnfFormula(num_vars=2, clauses=[[1, 2], [-1, 2]])
        res = run_solver(f, solver_cfg)
        assert res.status is Status.SAT
        assert res.model and 2 in res.model

    def test_trivial_unsat(self, solver_cfg):
        f = CnfFormula(num_vars=1, clauses=[[1], [-1]])
        res = run_solver(f, solver_cfg)
        assert res.status is Status.UNSAT
        assert res.model is None

    def test_missing_executable(self):
        cfg = SolverConfig(command=["/nonexistent/solver"])
        f = CnfFormula(num_vars=1, clauses=[[1]])
        with pytest.raises(SolverError):
            run_solver(f, cfg)

    def test_empty_formula_refused(self, solver_cfg):
        with pytest.raises(ValueError):
            run_solver(CnfFormula(num_vars=0), solver_cfg)


class TestFindDsGraph:
    def test_below_bound_short_circuits(self):
        # Answered from the vertex-count floor; no solver needed.
        cfg = SolverConfig(command=["/nonexistent/solver"])
        g, res = harness.find_ds_graph(4, 3, 3, cfg)
        assert g is None
        assert res.status is Status.UNSAT
        assert res.solver_stdout_digest == "below-bound"

    def test_5_3_3_finds_c5(self, solver_cfg):
        g, res = harness.find_ds_graph(5, 3, 3, solver_cfg)
        assert res.status is Status.SAT
        c5 = Graph.from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
        assert canon.isomorphic(g, c5)

    def test_13_3_5_matches_known_graph(self, solver_cfg):
        from ramsat import constructions

        g, res = harness.find_ds_graph(13, 3, 5, solver_cfg)
        assert res.status is Status.SAT
        known = constructions.circulant(
            constructions.CirculantSpec(13, frozenset({1, 5}))
        )
        assert canon.isomorphic(g, known)

    def test_unsat_between_bound_and_answer(self, solver_cfg):
        for n in (9, 10):
            g, res = harness.find_ds_graph(n, 3, 5, solver_cfg)
            assert g is None
            assert res.status is Status.UNSAT


class TestEnumerate:
    def test_full_labeled_enumeration_5_3_3(self, solver_cfg):
        out = harness.enumerate_ds(5, 3, 3, solver_cfg)
        assert out.complete
        assert out.labeled_models == 12
        assert len(out.classes) == 1
        assert saturation.is_doubly_saturated(out.classes[0], 3, 3).ok()

    def test_no_graphs_8_3_4(self, solver_cfg):
        out = harness.enumerate_ds(8, 3, 4, solver_cfg)
        assert out.complete
        assert out.labeled_models == 0
        assert out.classes == []

    def test_model_cap_marks_incomplete(self, solver_cfg):
        out = harness.enumerate_ds(5, 3, 3, solver_cfg, max_models=3)
        assert not out.complete
        assert out.labeled_models == 3

    def test_below_bound(self, solver_cfg):
        out = harness.enumerate_ds(3, 3, 3, solver_cfg)
        assert out.complete and out.labeled_models == 0


class TestSearchMinN:
    def test_3_3(self, solver_cfg):
        rep = harness.search_min_n(3, 3, 8, solver_cfg)
        assert rep.n_min == 5
        assert not rep.conditional
        assert rep.statuses == {5: "SAT"}
        assert saturation.is_doubly_saturated(rep.graph, 3, 3).ok()

    def test_range_check(self, solver_cfg):
        with pytest.raises(ValueError):
            harness.search_min_n(3, 3, 4, solver_cfg)

    def test_json_shape(self, solver_cfg):
        rep = harness.search_min_n(3, 3, 8, solver_cfg)
        data = rep.to_json()
        assert data["n_min"] == 5
        assert data["graph6"]
        assert data["conditional"] is False


class TestModelIntegrity:
    def test_forged_model_rejected(self):
        f = CnfFormula(num_vars=2, clauses=[[1], [2]])
        with pytest.raises(harness.SolverIntegrityError):
            harness._check_model(f, [1, -2])
