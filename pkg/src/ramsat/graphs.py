"""Simple undirected graphs as bitset adjacency rows, with graph6 I/O.

Vertices are 0..n-1.  Row v is a Python int whose bit u is set iff u and v
are adjacent.  Graph values are immutable; edge mutation returns new values.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 1024


class GraphError(ValueError):
    pass


class Graph:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} out of range [1, {MAX_VERTICES}]")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits set at indices >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            bits = row
            while bits:
                u = (bits & -bits).bit_length() - 1
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
                bits &= bits - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} out of range [1, {MAX_VERTICES}]")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n, ((full & ~row & ~(1 << v)) for v, row in enumerate(self.rows))
        )

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            bits = self.rows[u] >> (u + 1) << (u + 1)
            while bits:
                v = (bits & -bits).bit_length() - 1
                yield (u, v)
                bits &= bits - 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.rows[u] >> v & 1:
                    yield (u, v)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph in which old vertex v becomes perm[v]."""
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    """(min degree, max degree, sorted degree sequence)."""
    seq = sorted(g.degree(v) for v in range(g.n))
    return seq[0], seq[-1], seq


# graph6 encoding, per the standard formats-and-tools description.


class Graph6Error(GraphError):
    pass


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    raise Graph6Error(f"n={n} too large for graph6")


def write_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    out = bytearray(_g6_size_bytes(g.n))
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise Graph6Error("empty graph6 line")
    if line.startswith(">>graph6<<"):
        line = line[10:]
    data = line.encode("ascii", errors="strict")
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 printable range")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 orders above 258047 not supported")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        payload = data[4:]
    else:
        n = data[0] - 63
        payload = data[1:]
    if n == 0:
        raise Graph6Error("graph6 line encodes the order-0 graph")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(payload) != need:
        raise Graph6Error(
            f"graph6 payload has {len(payload)} bytes, expected {need} for n={n}"
        )
    bits = []
    for byte in payload:
        val = byte - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits in graph6 payload")
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)
