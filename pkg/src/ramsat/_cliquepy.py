"""Pure-Python clique branch-and-bound kernel on int-bitset adjacency.

Tomita-style: greedy sequential coloring gives the pruning bound, vertices
are processed in reverse color order, lowest index breaks ties.  Used when
the compiled extension is unavailable (same algorithm, same witnesses).
"""

from __future__ import annotations

BACKEND = "python"


def solve(rows: list[int], n: int, subset: int, target: int) -> tuple[int, list[int]]:
    """Maximum clique restricted to the `subset` bitset.

    If target > 0 the search stops as soon as a clique of size >= target is
    found (decision mode).  Returns (size, vertices of the best clique).
    """
    best_size = 0
    best_clique: list[int] = []
    R: list[int] = []

    def expand(P: int) -> bool:
        nonlocal best_size, best_clique
        # Greedy coloring: order[] ascending by color class.
        order = []
        bounds = []
        uncolored = P
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                bit = avail & -avail
                v = bit.bit_length() - 1
                order.append(v)
                bounds.append(color)
                avail &= ~rows[v]
                avail ^= bit
                uncolored ^= bit
        rsize = len(R)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= best_size:
                return False
            v = order[i]
            new_p = P & rows[v]
            R.append(v)
            if new_p:
                if expand(new_p):
                    return True
            elif len(R) > best_size:
                best_size = len(R)
                best_clique = R.copy()
                if target and best_size >= target:
                    R.pop()
                    return True
            R.pop()
            P &= ~(1 << v)
        return False

    if target:
        # Decision mode prunes at target - 1 so any hit is an immediate exit.
        best_size = target - 1
        best_clique = []
        if expand(subset):
            return len(best_clique), best_clique
        return 0, []
    if subset:
        expand(subset)
    return best_size, best_clique
