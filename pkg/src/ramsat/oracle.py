"""Exhaustive small-n oracle, independent of the clique solver and verifier.

Labeled graphs on n vertices are 2^C(n,2) edge masks.  Goodness is decided
by testing every s-subset (clique) and t-subset (independent set) edge mask
directly; double saturation by flipping every pair and re-deciding goodness
from scratch.  numpy vectorizes the enumeration; the per-graph re-checks
stay scalar and definition-literal.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .canon import canon_bytes
from .graphs import Graph

ORACLE_MAX_N = 8


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


def _subset_masks(n: int, k: int) -> list[int]:
    idx = pair_index(n)
    masks = []
    for subset in combinations(range(n), k):
        m = 0
        for pair in combinations(subset, 2):
            m |= 1 << idx[pair]
        masks.append(m)
    return masks


def mask_to_graph(mask: int, n: int) -> Graph:
    rows = [0] * n
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> bit & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, rows)


def graph_to_mask(g: Graph) -> int:
    mask = 0
    bit = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.rows[u] >> v & 1:
                mask |= 1 << bit
            bit += 1
    return mask


def good_mask(mask: int, clique_masks: list[int], indep_masks: list[int]) -> bool:
    for m in clique_masks:
        if mask & m == m:
            return False
    for m in indep_masks:
        if mask & m == 0:
            return False
    return True


def enumerate_good_masks(n: int, s: int, t: int) -> np.ndarray:
    """All labeled R(s,t)-good graphs on n vertices, as sorted edge masks."""
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle enumeration capped at n <= {ORACLE_MAX_N}")
    if s < 3 or t < 3:
        raise ValueError(f"parameters s={s}, t={t} outside the regime s,t >= 3")
    pair_count = n * (n - 1) // 2
    total = 1 << pair_count
    clique_masks = _subset_masks(n, s) if s <= n else []
    indep_masks = _subset_masks(n, t) if t <= n else []
    chunk = 1 << 22
    out = []
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        g = np.arange(start, stop, dtype=np.int64)
        ok = np.ones(stop - start, dtype=bool)
        for m in clique_masks:
            np.logical_and(ok, (g & m) != m, out=ok)
        for m in indep_masks:
            np.logical_and(ok, (g & m) != 0, out=ok)
        out.append(g[ok])
    return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def ds_masks_literal(n: int, s: int, t: int) -> list[int]:
    """Labeled doubly saturated masks via the definition-literal check:
    mutate every pair and re-decide goodness from scratch."""
    clique_masks = _subset_masks(n, s) if s <= n else []
    indep_masks = _subset_masks(n, t) if t <= n else []
    pair_count = n * (n - 1) // 2
    full = (1 << pair_count) - 1
    result = []
    for mask in enumerate_good_masks(n, s, t).tolist():
        if mask == 0 or mask == full:
            continue
        if all(
            not good_mask(mask ^ (1 << b), clique_masks, indep_masks)
            for b in range(pair_count)
        ):
            result.append(mask)
    return result


def brute_force_oracle(n: int, s: int, t: int) -> list[Graph]:
    """One representative per isomorphism class of doubly saturated
    R(s,t)-good graphs on n vertices."""
    seen: dict[bytes, Graph] = {}
    for mask in ds_masks_literal(n, s, t):
        g = mask_to_graph(mask, n)
        key = canon_bytes(g)
        if key not in seen:
            seen[key] = g
    return [seen[key] for key in sorted(seen)]


def good_flag_array(n: int, s: int, t: int) -> np.ndarray:
    """Boolean array over all 2^C(n,2) masks: labeled graph is good."""
    pair_count = n * (n - 1) // 2
    total = 1 << pair_count
    flags = np.zeros(total, dtype=bool)
    flags[enumerate_good_masks(n, s, t)] = True
    return flags


def ds_flag_array(n: int, s: int, t: int) -> np.ndarray:
    """Boolean array over all masks: labeled graph is doubly saturated.

    Vectorized equivalent of the literal check: good, not complete, not
    empty, and every single-pair flip leaves the good set.
    """
    good = good_flag_array(n, s, t)
    pair_count = n * (n - 1) // 2
    total = 1 << pair_count
    ds = good.copy()
    ds[0] = False
    ds[total - 1] = False
    idx = np.arange(total, dtype=np.int64)
    for b in range(pair_count):
        np.logical_and(ds, ~good[idx ^ (1 << b)], out=ds)
    return ds
