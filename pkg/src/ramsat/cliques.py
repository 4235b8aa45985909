"""Exact clique and independence computation.

Thin dispatch layer over the branch-and-bound kernel.  The compiled Cython
kernel is preferred; the pure-Python kernel is selected when the extension
is missing or RAMSAT_PURE is set.  Both produce identical witnesses.
"""

from __future__ import annotations

import os

from . import _cliquepy
from .graphs import Graph

if os.environ.get("RAMSAT_PURE"):
    _kernel = _cliquepy
else:
    try:
        from . import _cliquecore as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _cliquepy

BACKEND = _kernel.BACKEND

if BACKEND == "cython":
    import numpy as _np

    def _run(rows, n, subset, target):
        w = (n + 63) // 64
        adj = _np.zeros((n, w), dtype=_np.uint64)
        mask = (1 << 64) - 1
        for v, row in enumerate(rows):
            i = 0
            while row:
                adj[v, i] = row & mask
                row >>= 64
                i += 1
        sub = _np.zeros(w, dtype=_np.uint64)
        i = 0
        while subset:
            sub[i] = subset & mask
            subset >>= 64
            i += 1
        return _kernel.solve(adj, n, sub, target)

else:

    def _run(rows, n, subset, target):
        return _kernel.solve(list(rows), n, subset, target)


# Degeneracy ordering pays off on larger instances only; below this the
# kernel's coloring bound alone is enough and the reorder is pure overhead.
_REORDER_MIN_N = 33


def _degeneracy_order(rows: list[int], n: int) -> list[int]:
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        best_v = -1
        best_d = n + 1
        bits = alive
        while bits:
            v = (bits & -bits).bit_length() - 1
            d = (rows[v] & alive).bit_count()
            if d < best_d:
                best_d = d
                best_v = v
            bits &= bits - 1
        order.append(best_v)
        alive &= ~(1 << best_v)
    return order


def _solve(g: Graph, subset: int, target: int) -> tuple[int, list[int]]:
    full = (1 << g.n) - 1
    if subset != full:
        # Work on the induced subgraph; subset queries are usually tiny.
        verts = []
        bits = subset
        while bits:
            verts.append((bits & -bits).bit_length() - 1)
            bits &= bits - 1
        if not verts:
            return 0, []
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            nb = g.rows[v] & subset
            while nb:
                u = (nb & -nb).bit_length() - 1
                rows[i] |= 1 << pos[u]
                nb &= nb - 1
        size, clique = _solve_rows(rows, len(verts), target)
        return size, sorted(verts[i] for i in clique)
    return _solve_rows(list(g.rows), g.n, target)


def _solve_rows(rows: list[int], n: int, target: int) -> tuple[int, list[int]]:
    full = (1 << n) - 1
    if n >= _REORDER_MIN_N:
        # Kernel expands high indices first; put low-degeneracy vertices there.
        order = _degeneracy_order(rows, n)
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = n - 1 - i
        new_rows = [0] * n
        for v in range(n):
            nb = rows[v]
            while nb:
                u = (nb & -nb).bit_length() - 1
                new_rows[pos[v]] |= 1 << pos[u]
                nb &= nb - 1
        size, clique = _run(new_rows, n, full, target)
        inv = [0] * n
        for v, p in enumerate(pos):
            inv[p] = v
        return size, sorted(inv[v] for v in clique)
    size, clique = _run(rows, n, full, target)
    return size, sorted(clique)


def max_clique(g: Graph, subset: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Clique number with a witness, optionally restricted to a vertex bitset."""
    full = (1 << g.n) - 1
    sub = full if subset is None else subset & full
    size, clique = _solve(g, sub, 0)
    return size, tuple(clique)


def clique_number(g: Graph) -> int:
    return max_clique(g)[0]


def find_clique(g: Graph, k: int, subset: int | None = None) -> tuple[int, ...] | None:
    """First k-clique within the subset (whole graph if absent), else None.

    Decision query: exits on the first witness rather than proving optimality.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"clique size {k} out of range [1, {g.n}]")
    full = (1 << g.n) - 1
    sub = full if subset is None else subset & full
    size, clique = _solve(g, sub, k)
    if size >= k:
        return tuple(clique[:k])
    return None


def has_clique(g: Graph, k: int, subset: int | None = None) -> bool:
    return find_clique(g, k, subset) is not None


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def max_independent_set(g: Graph, subset: int | None = None) -> tuple[int, tuple[int, ...]]:
    return max_clique(g.complement(), subset)
