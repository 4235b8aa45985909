"""CNF encoding of "a doubly saturated R(s,t)-good graph on n vertices".

Clause groups:
  goodness     one clause per s-subset (some pair missing) and per t-subset
               (some pair present): C(n,s) + C(n,t) clauses.
  degeneracy   the graph is neither complete nor empty (two wide clauses).
  maximality   witness variables p[{i,j},k] say vertex k certifies that the
               non-edge {i,j} closes an s-clique; gated implication clauses
               plus an at-least-(s-2) cardinality layer per pair.
  minimality   the polarity-dual layer with witnesses q[{i,j},k] and
               at-least-(t-2) over independent-set certifiers.
  lex          optional symmetry breaking: row i lex-below row j for every
               i < j, with positions i and j dropped from both rows.

Variable numbering: edge variables first in lexicographic pair order, then
maximality witnesses grouped by pair, then minimality witnesses, then
sequential-counter auxiliaries, then lex auxiliaries.  Emission is fully
deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path

from .graphs import Graph

GOODNESS_CLAUSE_BUDGET = 5_000_000


class EncodingError(ValueError):
    pass


class _Alloc:
    def __init__(self, start: int):
        self.next = start

    def __call__(self) -> int:
        v = self.next
        self.next += 1
        return v


@dataclass
class VarMap:
    n: int
    s: int
    t: int
    edge_vars: dict[tuple[int, int], int]
    max_witness: dict[tuple[int, int, int], int]
    min_witness: dict[tuple[int, int, int], int]
    counter_vars: tuple[int, int]  # [lo, hi) id range
    lex_aux: tuple[int, int]
    num_vars: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "edge_vars": [[i, j, v] for (i, j), v in self.edge_vars.items()],
            "max_witness": [[i, j, k, v] for (i, j, k), v in self.max_witness.items()],
            "min_witness": [[i, j, k, v] for (i, j, k), v in self.min_witness.items()],
            "counter_vars": list(self.counter_vars),
            "lex_aux": list(self.lex_aux),
            "num_vars": self.num_vars,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VarMap":
        return cls(
            n=data["n"],
            s=data["s"],
            t=data["t"],
            edge_vars={(i, j): v for i, j, v in data["edge_vars"]},
            max_witness={(i, j, k): v for i, j, k, v in data["max_witness"]},
            min_witness={(i, j, k): v for i, j, k, v in data["min_witness"]},
            counter_vars=tuple(data["counter_vars"]),
            lex_aux=tuple(data["lex_aux"]),
            num_vars=data["num_vars"],
        )


@dataclass
class CnfFormula:
    num_vars: int
    clauses: list[list[int]] = field(default_factory=list)
    groups: list[tuple[str, int, int]] = field(default_factory=list)  # tag, lo, hi

    def add_group(self, tag: str, clauses: list[list[int]]) -> None:
        lo = len(self.clauses)
        self.clauses.extend(clauses)
        self.groups.append((tag, lo, len(self.clauses)))

    def group_clause_count(self, tag: str) -> int:
        return sum(hi - lo for t, lo, hi in self.groups if t == tag)

    def validate(self) -> None:
        for clause in self.clauses:
            if not clause:
                raise EncodingError("empty clause in formula")
            seen = set()
            for lit in clause:
                v = abs(lit)
                if not 1 <= v <= self.num_vars:
                    raise EncodingError(f"literal {lit} outside 1..{self.num_vars}")
                if -lit in seen:
                    raise EncodingError(f"tautological clause {clause}")
                seen.add(lit)


def at_most_k(lits: list[int], k: int, alloc) -> list[list[int]]:
    """Sinz sequential counter: at most k of lits are true."""
    m = len(lits)
    if k >= m:
        return []
    if k == 0:
        return [[-l] for l in lits]
    regs = [[alloc() for _ in range(k)] for _ in range(m - 1)]
    clauses = [[-lits[0], regs[0][0]]]
    for j in range(1, k):
        clauses.append([-regs[0][j]])
    for i in range(1, m - 1):
        clauses.append([-lits[i], regs[i][0]])
        clauses.append([-regs[i - 1][0], regs[i][0]])
        for j in range(1, k):
            clauses.append([-lits[i], -regs[i - 1][j - 1], regs[i][j]])
            clauses.append([-regs[i - 1][j], regs[i][j]])
        clauses.append([-lits[i], -regs[i - 1][k - 1]])
    clauses.append([-lits[m - 1], -regs[m - 2][k - 1]])
    return clauses


def at_least_k(lits: list[int], k: int, alloc) -> list[list[int]]:
    """At least k of lits are true, as the sequential counter at-most-(m-k)
    over negated literals; k in {0, 1, m} are special-cased."""
    m = len(lits)
    if k < 0:
        raise EncodingError(f"negative threshold {k}")
    if k > m:
        # Unsatisfiable request; the empty clause is emitted explicitly.
        return [[]]
    if k == 0:
        return []
    if k == 1:
        return [list(lits)]
    if k == m:
        return [[l] for l in lits]
    return at_most_k([-l for l in lits], m - k, alloc)


def lex_leq(a: list[int], b: list[int], alloc) -> list[list[int]]:
    """Recursive lexicographic a <= b over equal-length variable vectors.

    Base: single clause (-a1, b1).  Step: that clause, an auxiliary y with
    four clauses forcing y <-> (a1 <-> b1), and the tail encoding with -y
    prepended to each of its clauses.
    """
    if len(a) != len(b):
        raise EncodingError(f"lex vectors differ in length: {len(a)} vs {len(b)}")
    if not a:
        raise EncodingError("lex vectors must be non-empty")
    if len(a) == 1:
        return [[-a[0], b[0]]]
    clauses = [[-a[0], b[0]]]
    y = alloc()
    clauses += [
        [-y, -a[0], b[0]],
        [-y, a[0], -b[0]],
        [y, a[0], b[0]],
        [y, -a[0], -b[0]],
    ]
    for tail in lex_leq(a[1:], b[1:], alloc):
        clauses.append([-y] + tail)
    return clauses


def encode_ds(
    n: int, s: int, t: int, symmetry_break: bool = True
) -> tuple[CnfFormula, VarMap]:
    if s < 3 or t < 3:
        raise EncodingError(f"parameters s={s}, t={t} outside the regime s,t >= 3")
    if n < max(s, t):
        raise EncodingError(f"n={n} below max(s,t)={max(s, t)}")
    goodness_count = comb(n, s) + comb(n, t)
    if goodness_count > GOODNESS_CLAUSE_BUDGET:
        raise EncodingError(
            f"goodness layer needs {goodness_count} clauses, "
            f"over the budget of {GOODNESS_CLAUSE_BUDGET}"
        )

    pairs = list(combinations(range(n), 2))
    edge = {pair: i + 1 for i, pair in enumerate(pairs)}

    def e(i: int, j: int) -> int:
        return edge[(i, j) if i < j else (j, i)]

    alloc = _Alloc(len(pairs) + 1)
    pmax = {}
    for i, j in pairs:
        for k in range(n):
            if k != i and k != j:
                pmax[(i, j, k)] = alloc()
    pmin = {}
    for i, j in pairs:
        for k in range(n):
            if k != i and k != j:
                pmin[(i, j, k)] = alloc()

    f = CnfFormula(num_vars=0)

    good = [[-e(i, j) for i, j in combinations(sub, 2)] for sub in combinations(range(n), s)]
    good += [[e(i, j) for i, j in combinations(sub, 2)] for sub in combinations(range(n), t)]
    f.add_group("goodness", good)
    f.add_group(
        "degeneracy",
        [[e(i, j) for i, j in pairs], [-e(i, j) for i, j in pairs]],
    )

    others = {
        (i, j): [k for k in range(n) if k != i and k != j] for i, j in pairs
    }
    maximality = []
    for i, j in pairs:
        eij = e(i, j)
        for k in others[(i, j)]:
            p = pmax[(i, j, k)]
            maximality.append([eij, -p, e(i, k)])
            maximality.append([eij, -p, e(j, k)])
        for k, k2 in combinations(others[(i, j)], 2):
            maximality.append([eij, -pmax[(i, j, k)], -pmax[(i, j, k2)], e(k, k2)])
    f.add_group("maximality", maximality)

    counter_lo = alloc.next
    card = []
    for i, j in pairs:
        card += at_least_k([pmax[(i, j, k)] for k in others[(i, j)]], s - 2, alloc)
    f.add_group("cardinality", card)

    minimality = []
    for i, j in pairs:
        eij = e(i, j)
        for k in others[(i, j)]:
            q = pmin[(i, j, k)]
            minimality.append([-eij, -q, -e(i, k)])
            minimality.append([-eij, -q, -e(j, k)])
        for k, k2 in combinations(others[(i, j)], 2):
            minimality.append([-eij, -pmin[(i, j, k)], -pmin[(i, j, k2)], -e(k, k2)])
    f.add_group("minimality", minimality)

    card = []
    for i, j in pairs:
        card += at_least_k([pmin[(i, j, k)] for k in others[(i, j)]], t - 2, alloc)
    f.add_group("cardinality", card)
    counter_hi = alloc.next

    lex_lo = alloc.next
    if symmetry_break:
        lex = []
        for i, j in pairs:
            ks = others[(i, j)]
            lex += lex_leq([e(i, k) for k in ks], [e(j, k) for k in ks], alloc)
        f.add_group("lex", lex)
    lex_hi = alloc.next

    f.num_vars = alloc.next - 1
    f.validate()
    vm = VarMap(
        n=n,
        s=s,
        t=t,
        edge_vars=edge,
        max_witness=pmax,
        min_witness=pmin,
        counter_vars=(counter_lo, counter_hi),
        lex_aux=(lex_lo, lex_hi),
        num_vars=f.num_vars,
    )
    return f, vm


def decode_model(vm: VarMap, model: list[int] | dict[int, bool]) -> Graph:
    """Graph from a model's edge-variable valuation; auxiliaries ignored."""
    if isinstance(model, dict):
        valuation = model
    else:
        valuation = {abs(lit): lit > 0 for lit in model if lit != 0}
    rows = [0] * vm.n
    for (i, j), var in vm.edge_vars.items():
        if var not in valuation:
            raise EncodingError(f"model misses edge variable {var} for pair ({i},{j})")
        if valuation[var]:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(vm.n, rows)


def dimacs_lines(f: CnfFormula, vm: VarMap | None = None) -> list[str]:
    lines = ["c ramsat-encoding 1"]
    if vm is not None:
        for (i, j), var in vm.edge_vars.items():
            lines.append(f"c edge {i} {j} {var}")
        for (i, j, k), var in vm.max_witness.items():
            lines.append(f"c pmax {i} {j} {k} {var}")
        for (i, j, k), var in vm.min_witness.items():
            lines.append(f"c pmin {i} {j} {k} {var}")
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for clause in f.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return lines


def write_dimacs(f: CnfFormula, path: str | Path, vm: VarMap | None = None) -> None:
    path = Path(path)
    path.write_text("\n".join(dimacs_lines(f, vm)) + "\n")
    if vm is not None:
        path.with_suffix(path.suffix + ".varmap.json").write_text(
            json.dumps(vm.to_json())
        )
