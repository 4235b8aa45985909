"""Circulant and Paley graph generators plus the known infinite families.

Distance sets use the cyclic distance min(d mod n, n - d mod n); intervals
[a, b] are inclusive on both ends throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cliques
from .graphs import Graph


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    distances: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"circulant order {self.n} must be positive")
        for d in self.distances:
            if not 1 <= d <= self.n // 2:
                raise ValueError(
                    f"distance {d} outside [1, {self.n // 2}] for n={self.n}"
                )

    def text(self) -> str:
        return f"C({self.n}; {','.join(str(d) for d in sorted(self.distances))})"

    def to_json(self) -> dict:
        return {"n": self.n, "distances": sorted(self.distances)}


@dataclass(frozen=True)
class PaleyScanRow:
    s: int
    p: int


def circulant(spec: CirculantSpec) -> Graph:
    n = spec.n
    rows = [0] * n
    for x in range(n):
        for d in spec.distances:
            rows[x] |= 1 << ((x + d) % n)
            rows[x] |= 1 << ((x - d) % n)
    return Graph(n, rows)


def construct_r4t(t: int) -> tuple[CirculantSpec, Graph]:
    """Circulant family avoiding 4-cliques and t-independent sets on 6t-11
    vertices: distances {m} with m = t-2 plus the interval [2m+1, 3m]."""
    if t < 4:
        raise ValueError(f"t={t} below the family's range (t >= 4)")
    m = t - 2
    n = 6 * m + 1
    distances = frozenset({m} | set(range(2 * m + 1, 3 * m + 1)))
    spec = CirculantSpec(n, distances)
    return spec, circulant(spec)


def construct_r3t(t: int) -> tuple[CirculantSpec, Graph]:
    """Conjectured triangle-free family on 5t-10 vertices for odd t >= 17.

    No correctness promise: callers verify the double saturation separately.
    """
    if t % 2 == 0:
        raise ValueError(f"t={t} must be odd")
    if t < 17:
        raise ValueError(f"t={t} below the family's range (odd t >= 17)")
    n = 5 * t - 10
    distances = frozenset(
        set(range(t - 4, t - 2))
        | set(range(t + 1, (3 * t - 9) // 2 + 1))
        | {(3 * t - 5) // 2, 2 * t - 4}
    )
    spec = CirculantSpec(n, distances)
    return spec, circulant(spec)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def paley_spec(p: int) -> CirculantSpec:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 1:
        raise ValueError(f"{p} is not congruent to 1 mod 4")
    residues = {x * x % p for x in range(1, (p - 1) // 2 + 1)}
    distances = frozenset(min(r, p - r) for r in residues)
    return CirculantSpec(p, distances)


def paley(p: int) -> Graph:
    """Paley graph on Z/pZ for prime p = 1 mod 4: adjacency iff the
    difference is a nonzero quadratic residue."""
    return circulant(paley_spec(p))


def primes_1_mod_4(p_max: int):
    for p in range(5, p_max + 1):
        if p % 4 == 1 and is_prime(p):
            yield p


def paley_is_doubly_saturated_shortcut(p: int, s: int) -> bool:
    """Edge-transitivity + self-complementarity shortcut for R(s,s).

    It suffices that the graph has no s-clique and that one arbitrary
    added edge completes an s-clique; symmetry covers every other edge and,
    through the complement, every removal.  Cross-checked against the full
    verifier for small p (see the constructions test suite).
    """
    g = paley(p)
    if s <= g.n and cliques.has_clique(g, s):
        return False
    if s - 2 > g.n:
        return False
    u, v = next(g.non_edges())
    common = g.rows[u] & g.rows[v]
    return cliques.has_clique(g, s - 2, subset=common)


def paley_scan(s: int, p_max: int) -> PaleyScanRow | None:
    """Least prime p <= p_max whose Paley graph is doubly saturated
    R(s,s)-good, via the shortcut check."""
    if s < 3:
        raise ValueError(f"s={s} below the supported regime (s >= 3)")
    if p_max < 5:
        raise ValueError(f"p_max={p_max} must be at least 5")
    for p in primes_1_mod_4(p_max):
        if paley_is_doubly_saturated_shortcut(p, s):
            return PaleyScanRow(s=s, p=p)
    return None
