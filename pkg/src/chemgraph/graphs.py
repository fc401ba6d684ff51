"""Small simple undirected graphs: validation, edge censuses, graph6 I/O.

Graphs are immutable once built and stored both as a packed bit matrix
(one integer bitmask per vertex, so n is capped at 64) and as neighbor
tuples.  That is all the enumeration engine ever needs: O(1) edge tests
and fast degree lookups.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .census import Census

#: Hard engine limit: adjacency rows are 64-bit masks.
MAX_VERTICES = 64

_G6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "neighbors", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(
            self,
            "neighbors",
            tuple(tuple(_bits(row)) for row in rows),
        )
        object.__setattr__(self, "m", m)

    @classmethod
    def from_bitrows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        g = cls.__new__(cls)
        n = len(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        for v, row in enumerate(rows):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >= 1 << n:
                raise ValueError(f"row {v} references vertices >= n={n}")
        for u in range(n):
            for v in _bits(rows[u]):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "neighbors", tuple(tuple(_bits(row)) for row in rows))
        object.__setattr__(g, "m", sum(row.bit_count() for row in rows) // 2)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in self.neighbors[u] if u < v
        )

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = self.rows[v] & ~seen
            seen |= new
            frontier |= new
        return seen == (1 << self.n) - 1

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def edge_census(g: Graph) -> Census:
    """Count the edges of g by the degrees {i, j} of their endpoints.

    Only degrees up to 3 are representable; a vertex of higher degree is an
    error, and so is a (1,1)-edge (an isolated K2 component, impossible in
    the connected order >= 7 graphs this census is meant for).
    """
    deg = g.degrees()
    if max(deg, default=0) > 3:
        raise ValueError(f"graph has a vertex of degree {max(deg)} > 3")
    counts = {(1, 2): 0, (1, 3): 0, (2, 2): 0, (2, 3): 0, (3, 3): 0}
    for u, v in g.edges():
        key = tuple(sorted((deg[u], deg[v])))
        if key == (1, 1):
            raise ValueError("graph has a (1,1)-edge; census has no x11 slot")
        counts[key] += 1
    return Census(
        counts[(1, 2)], counts[(1, 3)], counts[(2, 2)], counts[(2, 3)], counts[(3, 3)]
    )


class ChemicalCheck(NamedTuple):
    """Result of the chemical-graph test: a verdict plus the first failure."""

    ok: bool
    reason: str | None

    def __bool__(self) -> bool:
        return self.ok


def is_chemical_graph(g: Graph) -> ChemicalCheck:
    """Test connectivity, max degree <= 3, order >= 7 and size <= (3n-3)/2.

    The clauses are checked in that order and the first violation is
    reported; a degree-0 vertex shows up as a connectivity failure.
    """
    if not g.is_connected():
        return ChemicalCheck(False, "not connected")
    if g.max_degree() > 3:
        return ChemicalCheck(False, f"maximum degree {g.max_degree()} > 3")
    if g.n < 7:
        return ChemicalCheck(False, f"order {g.n} < 7")
    if 2 * g.m > 3 * g.n - 3:
        return ChemicalCheck(False, f"size {g.m} > (3n-3)/2 = {(3 * g.n - 3) // 2}")
    return ChemicalCheck(True, None)


# graph6: n is encoded as one byte n+63 for n <= 62, or as '~' plus three
# bytes holding 18 bits for 63 <= n <= 258047.  The upper triangle of the
# adjacency matrix is read column by column ((0,1), (0,2), (1,2), (0,3), ...),
# packed into 6-bit groups, zero-padded, and each group is offset by 63 so
# that every byte is printable ASCII in 63..126.


def write_graph6(g: Graph) -> str:
    """Encode a graph as a headerless graph6 record."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    group = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            group = group << 1 | (g.rows[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record, optionally prefixed by '>>graph6<<'."""
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 record")
    data = [ord(ch) - 63 for ch in text]
    if any(v < 0 or v > 63 for v in data):
        bad = next(ch for ch in text if not 63 <= ord(ch) <= 126)
        raise Graph6Error(f"character {bad!r} outside graph6 range 63..126")

    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated multi-byte vertex count")
        if data[1] == 63:
            raise Graph6Error("graph6 '~~' vertex counts exceed the engine limit")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    if n == 0:
        raise Graph6Error("graph6 record encodes an empty graph")
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the engine limit {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error(f"truncated adjacency data: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} adjacency bytes")

    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                edges.append((u, v))
            idx += 1
    # Padding bits beyond the triangle must be zero for the record to be canonical.
    for pad in range(nbits, nbytes * 6):
        if body[pad // 6] >> (5 - pad % 6) & 1:
            raise Graph6Error("nonzero padding bits")
    return Graph(n, edges)
