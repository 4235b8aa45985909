"""Canonical labeling by ordered-partition refinement with backtracking.

A small nauty-style search: refine to an equitable ordered partition, then
branch on the first smallest non-singleton cell, taking the minimum relabeled
adjacency bytes over all leaves.  No automorphism pruning; intended for
n <= 64 (explicit error above the ceiling, never a silent wrong answer).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

CANON_MAX_N = 64


class CanonicalSizeError(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalLabeling:
    perm: tuple[int, ...]  # perm[v] = canonical label of vertex v
    canon_bytes: bytes  # upper-triangle bits of the relabeled graph, row-major


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            by_sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = rows[v]
                sig = tuple((row & m).bit_count() for m in masks)
                by_sig.setdefault(sig, []).append(v)
            if len(by_sig) > 1:
                changed = True
            for sig in sorted(by_sig):
                new_cells.append(by_sig[sig])
        cells = new_cells
        if not changed:
            return cells


def _leaf_bytes(rows: tuple[int, ...], n: int, order: list[int]) -> bytes:
    # order[i] = old vertex receiving canonical label i
    bits = 0
    pos = 0
    for i in range(n):
        ri = rows[order[i]]
        for j in range(i + 1, n):
            bits = bits << 1 | (ri >> order[j] & 1)
            pos += 1
    nbytes = (pos + 7) // 8
    bits <<= nbytes * 8 - pos
    return bits.to_bytes(nbytes, "big") if nbytes else b""


def canonical_form(g: Graph) -> CanonicalLabeling:
    if g.n > CANON_MAX_N:
        raise CanonicalSizeError(
            f"canonical labeling supports n <= {CANON_MAX_N}, got {g.n}"
        )
    rows = g.rows
    n = g.n
    best: list = [None, None]  # bytes, order

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        target_idx = -1
        target_len = n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < target_len:
                target_idx = idx
                target_len = len(cell)
        if target_idx < 0:
            order = [cell[0] for cell in cells]
            cand = _leaf_bytes(rows, n, order)
            if best[0] is None or cand < best[0]:
                best[0] = cand
                best[1] = order
            return
        cell = cells[target_idx]
        for v in sorted(cell):
            rest = [u for u in cell if u != v]
            search(cells[:target_idx] + [[v], rest] + cells[target_idx + 1 :])

    search([list(range(n))])
    order = best[1]
    perm = [0] * n
    for label, v in enumerate(order):
        perm[v] = label
    return CanonicalLabeling(perm=tuple(perm), canon_bytes=best[0])


def canon_bytes(g: Graph) -> bytes:
    return canonical_form(g).canon_bytes


def isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canon_bytes(a) == canon_bytes(b)
