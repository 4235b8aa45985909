"""The verifier: R(s,t)-goodness and double saturation with witnesses.

A graph is doubly saturated R(s,t)-good when it is good (no s-clique, no
t-independent set), neither complete nor empty, every non-edge gains an
s-clique when added, and every edge gains a t-independent set when removed.
The saturation checks work on common (non-)neighborhoods directly: a new
s-clique through an added edge {u,v} is exactly {u,v} plus an (s-2)-clique
in N(u) & N(v), and dually for removals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import cliques
from .graphs import Graph


class Verdict(enum.Enum):
    DOUBLY_SATURATED = "DoublySaturated"
    NOT_GOOD = "NotGood"
    NOT_MAXIMAL = "NotMaximal"
    NOT_MINIMAL = "NotMinimal"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class SaturationReport:
    verdict: Verdict
    s: int
    t: int
    # Exactly one witness field is set unless the verdict is DoublySaturated.
    clique: tuple[int, ...] | None = None
    independent_set: tuple[int, ...] | None = None
    unsaturated_nonedge: tuple[int, int] | None = None
    unsaturated_edge: tuple[int, int] | None = None
    degeneracy: str | None = None

    def ok(self) -> bool:
        return self.verdict is Verdict.DOUBLY_SATURATED

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "s": self.s, "t": self.t}
        if self.clique is not None:
            out["clique"] = list(self.clique)
        if self.independent_set is not None:
            out["independent_set"] = list(self.independent_set)
        if self.unsaturated_nonedge is not None:
            out["unsaturated_nonedge"] = list(self.unsaturated_nonedge)
        if self.unsaturated_edge is not None:
            out["unsaturated_edge"] = list(self.unsaturated_edge)
        if self.degeneracy is not None:
            out["degeneracy"] = self.degeneracy
        return out


def _check_regime(s: int, t: int) -> None:
    if s < 3 or t < 3:
        raise ValueError(f"parameters s={s}, t={t} outside the regime s,t >= 3")


def is_good(g: Graph, s: int, t: int) -> SaturationReport:
    """Good iff no s-clique and no t-independent set; witness on failure."""
    _check_regime(s, t)
    if s <= g.n:
        clique = cliques.find_clique(g, s)
        if clique is not None:
            return SaturationReport(Verdict.NOT_GOOD, s, t, clique=clique)
    if t <= g.n:
        indep = cliques.find_clique(g.complement(), t)
        if indep is not None:
            return SaturationReport(Verdict.NOT_GOOD, s, t, independent_set=indep)
    return SaturationReport(Verdict.DOUBLY_SATURATED, s, t)


def is_doubly_saturated(g: Graph, s: int, t: int) -> SaturationReport:
    _check_regime(s, t)
    if g.n < 2:
        return SaturationReport(Verdict.DEGENERATE, s, t, degeneracy="n < 2")
    full = (1 << g.n) - 1
    ecount = g.edge_count()
    if ecount == g.n * (g.n - 1) // 2:
        return SaturationReport(Verdict.DEGENERATE, s, t, degeneracy="complete")
    if ecount == 0:
        return SaturationReport(Verdict.DEGENERATE, s, t, degeneracy="empty")

    good = is_good(g, s, t)
    if not good.ok():
        return good

    comp = g.complement()
    for u, v in g.non_edges():
        # Adding {u,v} must complete an s-clique: an (s-2)-clique in the
        # common neighborhood.
        common = g.rows[u] & g.rows[v]
        if cliques.find_clique(g, s - 2, subset=common) is None:
            return SaturationReport(Verdict.NOT_MAXIMAL, s, t, unsaturated_nonedge=(u, v))
    for u, v in g.edges():
        # Removing {u,v} must free a t-independent set: a (t-2)-independent
        # set among common non-neighbors.
        pool = comp.rows[u] & comp.rows[v] & ~(1 << u) & ~(1 << v) & full
        if t - 2 > g.n or cliques.find_clique(comp, t - 2, subset=pool) is None:
            return SaturationReport(Verdict.NOT_MINIMAL, s, t, unsaturated_edge=(u, v))
    return SaturationReport(Verdict.DOUBLY_SATURATED, s, t)


def ds_lower_bound(s: int, t: int) -> int:
    """Vertex-count floor 2s + 2t - 7 for doubly saturated R(s,t)-good graphs."""
    _check_regime(s, t)
    return 2 * s + 2 * t - 7


def check_witness(g: Graph, report: SaturationReport) -> bool:
    """Re-validate a failure witness by direct inspection of the graph."""
    if report.clique is not None:
        vs = report.clique
        return len(vs) == report.s and all(
            g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]
        )
    if report.independent_set is not None:
        vs = report.independent_set
        return len(vs) == report.t and not any(
            g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]
        )
    if report.unsaturated_nonedge is not None:
        u, v = report.unsaturated_nonedge
        if g.has_edge(u, v):
            return False
        added = g.add_edge(u, v)
        return cliques.find_clique(added, report.s) is None
    if report.unsaturated_edge is not None:
        u, v = report.unsaturated_edge
        if not g.has_edge(u, v):
            return False
        removed = g.remove_edge(u, v)
        return cliques.find_clique(removed.complement(), report.t) is None
    if report.degeneracy is not None:
        ecount = g.edge_count()
        return (
            g.n < 2
            or (report.degeneracy == "complete" and ecount == g.n * (g.n - 1) // 2)
            or (report.degeneracy == "empty" and ecount == 0)
        )
    return False
