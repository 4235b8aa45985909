"""Edge-addition ordering over good-graph isomorphism classes on fixed n.

Cover edges are computed by adding single edges; weak components come from
union-find.  Doubly saturated classes are exactly the singleton components,
which is cross-checked against the verifier on every run.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

from . import cliques, oracle, saturation
from .canon import canon_bytes
from .graphs import Graph, parse_graph6, write_graph6


class PosetError(ValueError):
    pass


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


@dataclass
class ComponentSummary:
    n: int
    s: int
    t: int
    class_count: int
    component_sizes: list[int]  # descending
    singleton_classes: list[str]  # graph6, sorted
    cover_edge_count: int
    components: list[list[int]] = field(default_factory=list)  # class indices
    edge_counts: list[int] = field(default_factory=list)  # per class

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "class_count": self.class_count,
            "component_sizes": self.component_sizes,
            "singleton_classes": self.singleton_classes,
            "cover_edge_count": self.cover_edge_count,
        }


def _is_good(g: Graph, s: int, t: int) -> bool:
    if s <= g.n and cliques.has_clique(g, s):
        return False
    return not (t <= g.n and cliques.has_clique(g.complement(), t))


def load_good_classes(lines, s: int, t: int) -> list[Graph]:
    """Parse, verify, and dedupe a graph6 stream of good graphs on one n."""
    classes: dict[bytes, Graph] = {}
    n = None
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
        except ValueError as exc:
            raise PosetError(f"line {lineno}: {exc}") from exc
        if n is None:
            n = g.n
        elif g.n != n:
            raise PosetError(f"line {lineno}: order {g.n} differs from {n}")
        report = saturation.is_good(g, s, t)
        if not report.ok():
            raise PosetError(
                f"line {lineno}: graph is not R({s},{t})-good: {report.to_json()}"
            )
        classes.setdefault(canon_bytes(g), g)
    return [classes[key] for key in sorted(classes)]


def enumerate_good_classes(n: int, s: int, t: int) -> list[Graph]:
    """Exhaustive good-class enumeration for n <= 8."""
    classes: dict[bytes, Graph] = {}
    for mask in oracle.enumerate_good_masks(n, s, t).tolist():
        g = oracle.mask_to_graph(mask, n)
        classes.setdefault(canon_bytes(g), g)
    return [classes[key] for key in sorted(classes)]


def build_poset(classes: list[Graph], s: int, t: int) -> ComponentSummary:
    if not classes:
        return ComponentSummary(0, s, t, 0, [], [], 0)
    n = classes[0].n
    index: dict[bytes, int] = {}
    for i, g in enumerate(classes):
        if g.n != n:
            raise PosetError("classes do not share one vertex count")
        key = canon_bytes(g)
        if key in index:
            raise PosetError("duplicate isomorphism class in input")
        index[key] = i

    uf = UnionFind(len(classes))
    covers = set()
    for i, g in enumerate(classes):
        for u, v in g.non_edges():
            bigger = g.add_edge(u, v)
            if not _is_good(bigger, s, t):
                continue
            key = canon_bytes(bigger)
            j = index.get(key)
            if j is None:
                # The input must be a complete enumeration for component
                # structure to be meaningful.
                raise PosetError(
                    f"edge addition leads to a good class missing from the "
                    f"input (from class {i})"
                )
            covers.add((i, j))
            uf.union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(len(classes)):
        groups.setdefault(uf.find(i), []).append(i)
    components = sorted(groups.values(), key=lambda c: (-len(c), c))
    singletons = []
    for comp in components:
        if len(comp) == 1:
            g = classes[comp[0]]
            # The characterization: singleton component <=> doubly saturated.
            if not saturation.is_doubly_saturated(g, s, t).ok():
                raise PosetError(
                    "singleton component fails the double-saturation verifier"
                )
            singletons.append(write_graph6(g))
    for comp in components:
        if len(comp) > 1:
            for i in comp:
                if saturation.is_doubly_saturated(classes[i], s, t).ok():
                    raise PosetError(
                        "doubly saturated class sits in a non-singleton component"
                    )
    return ComponentSummary(
        n=n,
        s=s,
        t=t,
        class_count=len(classes),
        component_sizes=[len(c) for c in components],
        singleton_classes=sorted(singletons),
        cover_edge_count=len(covers),
        components=components,
        edge_counts=[g.edge_count() for g in classes],
    )


def emit_component_plot_data(summary: ComponentSummary) -> str:
    """CSV rows (component id, size, member edge-count histogram)."""
    buf = io.StringIO()
    buf.write("component,size,edge_counts\n")
    for cid, comp in enumerate(summary.components):
        hist: dict[int, int] = {}
        for i in comp:
            ec = summary.edge_counts[i]
            hist[ec] = hist.get(ec, 0) + 1
        spec = ";".join(f"{ec}:{cnt}" for ec, cnt in sorted(hist.items()))
        buf.write(f"{cid},{len(comp)},{spec}\n")
    return buf.getvalue()
