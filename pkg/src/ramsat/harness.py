"""External SAT solver driver: solve, certify, enumerate, scan over n.

Any DIMACS solver that prints "s SATISFIABLE"/"s UNSATISFIABLE" and "v"
value lines works (CaDiCaL, kissat, varisat, ...).  Every decoded graph is
re-certified by the verifier before being returned: a solver or encoder
bug surfaces as a hard error, never as a wrong result.
"""

from __future__ import annotations

import enum
import hashlib
import json
import os
import shlex
import shutil
import subprocess
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import cnf, saturation
from .canon import canon_bytes
from .graphs import Graph

SOLVER_ENV = "RAMSAT_SOLVER"
_KNOWN_SOLVERS = ("cadical", "kissat", "varisat", "lingeling", "glucose")


class SolverError(RuntimeError):
    pass


class SolverIntegrityError(SolverError):
    """The solver claimed SAT with a model that violates the formula."""


class CertificationError(SolverError):
    """A decoded model failed the verifier: encoder or solver bug."""


class UnknownResult(SolverError):
    """Timeout or crash; never conflated with UNSAT."""


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass
class SolverConfig:
    command: list[str]
    time_limit: float = 300.0
    workdir: Path | None = None

    def __post_init__(self):
        if not self.command:
            raise ValueError("solver command must be non-empty")
        if self.time_limit <= 0:
            raise ValueError("time limit must be positive")

    @classmethod
    def from_file(cls, path: str | Path) -> "SolverConfig":
        text = Path(path).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = {}
            for line in text.splitlines():
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                data[key.strip()] = value.strip()
        cmd = data.get("solver_cmd")
        if not cmd:
            raise ValueError(f"config {path} lacks solver_cmd")
        return cls(
            command=shlex.split(cmd) if isinstance(cmd, str) else list(cmd),
            time_limit=float(data.get("time_limit_s", 300)),
            workdir=Path(data["workdir"]) if data.get("workdir") else None,
        )

    @classmethod
    def discover(cls, time_limit: float = 300.0) -> "SolverConfig | None":
        cmd = os.environ.get(SOLVER_ENV)
        if cmd:
            return cls(command=shlex.split(cmd), time_limit=time_limit)
        for name in _KNOWN_SOLVERS:
            path = shutil.which(name)
            if path:
                return cls(command=[path], time_limit=time_limit)
        return None


@dataclass
class SolverResult:
    status: Status
    model: list[int] | None = None
    wall_time: float = 0.0
    solver_stdout_digest: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "wall_time": round(self.wall_time, 3),
            "solver_stdout_digest": self.solver_stdout_digest,
        }


def _check_model(formula: cnf.CnfFormula, model: list[int]) -> None:
    true_lits = set(model)
    for clause in formula.clauses:
        if not any(lit in true_lits for lit in clause):
            raise SolverIntegrityError(
                f"solver model violates clause {clause}"
            )


def run_solver(formula: cnf.CnfFormula, cfg: SolverConfig,
               varmap: cnf.VarMap | None = None) -> SolverResult:
    if not formula.clauses:
        raise ValueError("refusing to run the solver on an empty formula")
    workdir = cfg.workdir
    tmp = None
    if workdir is None:
        tmp = tempfile.TemporaryDirectory(prefix="ramsat-")
        workdir = Path(tmp.name)
    try:
        path = Path(workdir) / "instance.cnf"
        cnf.write_dimacs(formula, path, varmap)
        argv = [
            arg.replace("{dimacs}", str(path)) for arg in cfg.command
        ]
        if all("{dimacs}" not in arg for arg in cfg.command):
            argv.append(str(path))
        start = time.monotonic()
        try:
            proc = subprocess.run(
                argv,
                capture_output=True,
                text=True,
                timeout=cfg.time_limit,
            )
        except FileNotFoundError as exc:
            raise SolverError(f"solver executable not found: {argv[0]}") from exc
        except subprocess.TimeoutExpired:
            return SolverResult(
                status=Status.UNKNOWN, wall_time=time.monotonic() - start
            )
        wall = time.monotonic() - start
        digest = hashlib.sha256(proc.stdout.encode()).hexdigest()
        status = None
        model: list[int] = []
        for line in proc.stdout.splitlines():
            if line.startswith("s "):
                token = line[2:].strip()
                if token == "SATISFIABLE":
                    status = Status.SAT
                elif token == "UNSATISFIABLE":
                    status = Status.UNSAT
                elif token == "UNKNOWN":
                    status = Status.UNKNOWN
            elif line.startswith("v "):
                model.extend(int(x) for x in line[2:].split())
        if status is None:
            if proc.returncode == 10:
                status = Status.SAT
            elif proc.returncode == 20:
                status = Status.UNSAT
            else:
                raise SolverError(
                    f"unparseable solver output (rc={proc.returncode}): "
                    f"{proc.stdout[:500]!r} {proc.stderr[:200]!r}"
                )
        if status is Status.SAT:
            model = [lit for lit in model if lit != 0]
            if not model:
                raise SolverError("SAT answer without value lines")
            _check_model(formula, model)
            return SolverResult(Status.SAT, model, wall, digest)
        return SolverResult(status, None, wall, digest)
    finally:
        if tmp is not None:
            tmp.cleanup()


def find_ds_graph(
    n: int, s: int, t: int, cfg: SolverConfig, symmetry_break: bool = True
) -> tuple[Graph | None, SolverResult]:
    """Solve one (n,s,t) instance; decoded graphs are certified or rejected."""
    if n < saturation.ds_lower_bound(s, t):
        # Below the proven floor: answered without invoking the solver.
        return None, SolverResult(Status.UNSAT, solver_stdout_digest="below-bound")
    formula, vm = cnf.encode_ds(n, s, t, symmetry_break=symmetry_break)
    result = run_solver(formula, cfg, vm)
    if result.status is Status.UNKNOWN:
        raise UnknownResult(f"solver UNKNOWN on (n={n}, s={s}, t={t})")
    if result.status is Status.UNSAT:
        return None, result
    g = cnf.decode_model(vm, result.model)
    report = saturation.is_doubly_saturated(g, s, t)
    if not report.ok():
        raise CertificationError(
            f"decoded model fails verification: {report.to_json()}"
        )
    return g, result


@dataclass
class EnumerationResult:
    classes: list[Graph] = field(default_factory=list)
    labeled_models: int = 0
    complete: bool = False  # reached UNSAT before the model cap


def enumerate_ds(
    n: int,
    s: int,
    t: int,
    cfg: SolverConfig,
    max_models: int = 1000,
    symmetry_break: bool = False,
) -> EnumerationResult:
    """Model enumeration with blocking clauses over the edge variables only,
    so each blocked assignment is exactly one labeled graph.  Symmetry
    breaking defaults off so labeled counts are meaningful."""
    out = EnumerationResult()
    if n < saturation.ds_lower_bound(s, t):
        out.complete = True
        return out
    formula, vm = cnf.encode_ds(n, s, t, symmetry_break=symmetry_break)
    classes: dict[bytes, Graph] = {}
    while out.labeled_models < max_models:
        result = run_solver(formula, cfg, vm)
        if result.status is Status.UNKNOWN:
            raise UnknownResult(f"solver UNKNOWN while enumerating (n={n})")
        if result.status is Status.UNSAT:
            out.complete = True
            break
        g = cnf.decode_model(vm, result.model)
        report = saturation.is_doubly_saturated(g, s, t)
        if not report.ok():
            raise CertificationError(
                f"decoded model fails verification: {report.to_json()}"
            )
        out.labeled_models += 1
        classes.setdefault(canon_bytes(g), g)
        valuation = {abs(lit): lit > 0 for lit in result.model}
        blocking = [
            -var if valuation[var] else var for var in vm.edge_vars.values()
        ]
        formula.add_group("blocking", [blocking])
    out.classes = [classes[key] for key in sorted(classes)]
    return out


@dataclass
class SearchReport:
    s: int
    t: int
    n_min: int | None = None
    graph: Graph | None = None
    statuses: dict[int, str] = field(default_factory=dict)
    wall_times: dict[int, float] = field(default_factory=dict)
    conditional: bool = False  # some smaller n returned UNKNOWN

    def to_json(self) -> dict:
        from .graphs import write_graph6

        return {
            "s": self.s,
            "t": self.t,
            "n_min": self.n_min,
            "graph6": write_graph6(self.graph) if self.graph else None,
            "statuses": {str(k): v for k, v in sorted(self.statuses.items())},
            "wall_times": {str(k): round(v, 3) for k, v in sorted(self.wall_times.items())},
            "conditional": self.conditional,
        }


def search_min_n(s: int, t: int, n_max: int, cfg: SolverConfig) -> SearchReport:
    """Ascending scan from the lower bound; the first SAT n wins.  Any
    UNKNOWN below it makes the minimality claim conditional."""
    report = SearchReport(s=s, t=t)
    floor = saturation.ds_lower_bound(s, t)
    if n_max < floor:
        raise ValueError(f"n_max={n_max} below the lower bound {floor}")
    for n in range(floor, n_max + 1):
        try:
            g, result = find_ds_graph(n, s, t, cfg)
        except UnknownResult:
            report.statuses[n] = Status.UNKNOWN.value
            report.conditional = True
            continue
        report.statuses[n] = result.status.value
        report.wall_times[n] = result.wall_time
        if g is not None:
            report.n_min = n
            report.graph = g
            break
    return report
