import os
import random

import pytest

from ramsat import harness
from ramsat.graphs import Graph


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RAMSAT_STRETCH"):
        return
    skip = pytest.mark.skip(reason="stretch target; set RAMSAT_STRETCH=1")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def solver_cfg():
    cfg = harness.SolverConfig.discover(time_limit=600.0)
    if cfg is None:
        pytest.skip("no external SAT solver available")
    return cfg


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edge_list(n, edges)


def dpll(clauses, assignment=None):
    """Tiny satisfiability check used as an independent oracle in tests.

    `assignment` maps var -> bool for forced values; free variables
    (auxiliaries) are chosen existentially.
    """
    def solve(clauses, assign):
        while True:
            unit = None
            simplified = []
            for clause in clauses:
                lits = []
                sat = False
                for lit in clause:
                    var = abs(lit)
                    if var in assign:
                        if assign[var] == (lit > 0):
                            sat = True
                            break
                    else:
                        lits.append(lit)
                if sat:
                    continue
                if not lits:
                    return False
                if len(lits) == 1 and unit is None:
                    unit = lits[0]
                simplified.append(lits)
            if not simplified:
                return True
            if unit is None:
                break
            assign = dict(assign)
            assign[abs(unit)] = unit > 0
            clauses = simplified
        var = abs(simplified[0][0])
        return solve(simplified, {**assign, var: True}) or solve(
            simplified, {**assign, var: False}
        )

    return solve(list(clauses), dict(assignment or {}))
