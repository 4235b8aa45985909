"""Compare the compiled clique kernel against the pure-Python fallback.

Run:  python3 benchmarks/bench_clique.py
"""

from __future__ import annotations

import time

from ramsat import _cliquepy, constructions
from ramsat.cliques import _REORDER_MIN_N, _degeneracy_order

try:
    from ramsat import _cliquecore
except ImportError:
    _cliquecore = None


def _reordered_rows(g):
    if g.n < _REORDER_MIN_N:
        return list(g.rows)
    order = _degeneracy_order(list(g.rows), g.n)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = g.n - 1 - i
    rows = [0] * g.n
    for u, v in g.edges():
        rows[pos[u]] |= 1 << pos[v]
        rows[pos[v]] |= 1 << pos[u]
    return rows


def _run_python(rows, n):
    return _cliquepy.solve(rows, n, (1 << n) - 1, 0)[0]


def _run_cython(rows, n):
    import numpy as np

    w = (n + 63) // 64
    adj = np.zeros((n, w), dtype=np.uint64)
    mask = (1 << 64) - 1
    for v, row in enumerate(rows):
        i = 0
        while row:
            adj[v, i] = row & mask
            row >>= 64
            i += 1
    sub = np.zeros(w, dtype=np.uint64)
    full = (1 << n) - 1
    i = 0
    while full:
        sub[i] = full & mask
        full >>= 64
        i += 1
    return _cliquecore.solve(adj, n, sub, 0)[0]


def main() -> None:
    cases = [
        ("paley(61)", constructions.paley(61)),
        ("paley(101)", constructions.paley(101)),
        ("paley(137)", constructions.paley(137)),
        ("r4t(12)", constructions.construct_r4t(12)[1]),
        ("r4t(20) complement", constructions.construct_r4t(20)[1].complement()),
    ]
    print(f"{'instance':<22} {'n':>4} {'omega':>5} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, g in cases:
        rows = _reordered_rows(g)
        t0 = time.perf_counter()
        omega_py = _run_python(rows, g.n)
        t_py = time.perf_counter() - t0
        if _cliquecore is None:
            print(f"{name:<22} {g.n:>4} {omega_py:>5} {t_py:>9.3f}s {'n/a':>10} {'n/a':>8}")
            continue
        t0 = time.perf_counter()
        omega_cy = _run_cython(rows, g.n)
        t_cy = time.perf_counter() - t0
        assert omega_py == omega_cy, (name, omega_py, omega_cy)
        print(
            f"{name:<22} {g.n:>4} {omega_py:>5} {t_py:>9.3f}s {t_cy:>9.3f}s "
            f"{t_py / t_cy:>7.1f}x"
        )


if __name__ == "__main__":
    main()
