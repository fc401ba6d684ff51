"""Pure-Python enumeration kernel.

Twin of the compiled kernel in ``_ckernel.pyx``: both expose exactly the
same three functions with identical output bytes, so the backends are
interchangeable and the test suite can diff them.

A graph enters the kernel as a sequence of adjacency bitmasks (row v has
bit u set iff uv is an edge); max degree 3 is required, vertex count at
most 64.  A *canonical form* is a byte string shared by all isomorphic
graphs: one length byte followed by the relabeled adjacency rows of the
lexicographically smallest labeling found by the refinement search, eight
big-endian bytes per row.

``accepted_children`` implements one step of canonical augmentation: it
extends a connected parent by one new vertex (joined to 1..3 vertices of
degree < 3) and keeps a child exactly when the parent is the child's
canonical parent, i.e. when deleting the child's designated vertex (the
non-cutvertex with the highest canonical position) gives back the parent's
isomorphism class.  Every isomorphism class of connected max-degree-3
graphs is then produced exactly once over the whole augmentation forest.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

MAXN = 64


def _validate(adj: Sequence[int]) -> int:
    n = len(adj)
    if not 1 <= n <= MAXN:
        raise ValueError(f"kernel supports 1..{MAXN} vertices, got {n}")
    for v, row in enumerate(adj):
        if row.bit_count() > 3:
            raise ValueError("kernel supports maximum degree 3")
        if row >> v & 1:
            raise ValueError(f"self-loop at vertex {v}")
    return n


def serialize(rows: Sequence[int]) -> bytes:
    """Pack adjacency rows into the canonical-form byte layout."""
    return bytes([len(rows)]) + b"".join(r.to_bytes(8, "big") for r in rows)


def deserialize(form: bytes) -> tuple[int, ...]:
    """Inverse of serialize."""
    n = form[0]
    if len(form) != 1 + 8 * n:
        raise ValueError("malformed canonical form")
    return tuple(int.from_bytes(form[1 + 8 * i : 9 + 8 * i], "big") for i in range(n))


def _neighbor_lists(adj: Sequence[int], n: int) -> list[tuple[int, ...]]:
    out = []
    for v in range(n):
        row = adj[v]
        nbrs = []
        while row:
            low = row & -row
            nbrs.append(low.bit_length() - 1)
            row ^= low
        out.append(tuple(nbrs))
    return out


def _refine(n: int, nbrs: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Equitable refinement: split color classes by neighbor color multisets."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical(adj: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (canonical rows, position of each vertex in the canonical graph)."""
    n = _validate(adj)
    nbrs = _neighbor_lists(adj, n)
    degs = sorted({row.bit_count() for row in adj})
    degree_rank = {d: i for i, d in enumerate(degs)}
    initial = [degree_rank[adj[v].bit_count()] for v in range(n)]

    best_rows: list[int] | None = None
    best_pos: list[int] | None = None

    def descend(colors: list[int]) -> None:
        nonlocal best_rows, best_pos
        colors = _refine(n, nbrs, colors)
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = -1
        for c in range(n):
            if counts[c] > 1:
                target = c
                break
        if target < 0:
            # Discrete coloring: colors is a bijection onto 0..n-1.
            rows = [0] * n
            for v in range(n):
                acc = 0
                for u in nbrs[v]:
                    acc |= 1 << colors[u]
                rows[colors[v]] = acc
            if best_rows is None or rows < best_rows:
                best_rows = rows
                best_pos = list(colors)
            return
        for v in range(n):
            if colors[v] != target:
                continue
            child = [
                c if c < target else (target if u == v else c + 1)
                for u, c in enumerate(colors)
            ]
            descend(child)

    descend(initial)
    assert best_rows is not None and best_pos is not None
    return tuple(best_rows), tuple(best_pos)


def canonical_form(adj: Sequence[int]) -> bytes:
    """Canonical form of the graph; equal bytes iff the graphs are isomorphic."""
    rows, _ = _canonical(adj)
    return serialize(rows)


def canonical_labeling(adj: Sequence[int]) -> tuple[bytes, tuple[int, ...]]:
    """Canonical form plus the canonical position assigned to each vertex."""
    rows, pos = _canonical(adj)
    return serialize(rows), pos


def _non_cutvertices(adj: Sequence[int], n: int) -> list[int]:
    """Vertices whose removal keeps the graph connected (graph assumed connected)."""
    if n == 1:
        return [0]
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    timer = 0
    # Iterative DFS from vertex 0 computing lowlink articulation points.
    stack: list[tuple[int, int, list[int], int]] = []
    root_children = 0
    disc[0] = low[0] = timer
    timer += 1
    stack.append((0, -1, list(_iter_bits(adj[0])), 0))
    while stack:
        v, parent, nbrs, i = stack.pop()
        if i < len(nbrs):
            stack.append((v, parent, nbrs, i + 1))
            u = nbrs[i]
            if disc[u] < 0:
                if v == 0:
                    root_children += 1
                disc[u] = low[u] = timer
                timer += 1
                stack.append((u, v, list(_iter_bits(adj[u])), 0))
            elif u != parent:
                low[v] = min(low[v], disc[u])
        elif parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent != 0 and low[v] >= disc[parent]:
                is_cut[parent] = True
    if root_children > 1:
        is_cut[0] = True
    return [v for v in range(n) if not is_cut[v]]


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _delete_vertex(adj: Sequence[int], n: int, w: int) -> list[int]:
    low_mask = (1 << w) - 1
    out = []
    for v in range(n):
        if v == w:
            continue
        row = adj[v]
        out.append((row & low_mask) | ((row >> (w + 1)) << w))
    return out


def accepted_children(adj: Sequence[int]) -> list[bytes]:
    """Canonical forms of the accepted one-vertex extensions of a connected parent."""
    n = _validate(adj)
    if n >= MAXN:
        raise ValueError(f"cannot extend a graph with {MAXN} vertices")
    parent_form = canonical_form(adj)
    cands = [v for v in range(n) if adj[v].bit_count() < 3]
    out: list[bytes] = []
    seen: set[bytes] = set()
    for size in (1, 2, 3):
        for subset in combinations(cands, size):
            child = list(adj)
            mask = 0
            for v in subset:
                child[v] |= 1 << n
                mask |= 1 << v
            child.append(mask)
            form, pos = canonical_labeling(child)
            if form in seen:
                continue
            seen.add(form)
            noncut = _non_cutvertices(child, n + 1)
            w = max(noncut, key=lambda v: pos[v])
            if w == n:
                out.append(form)
            elif canonical_form(_delete_vertex(child, n + 1, w)) == parent_form:
                out.append(form)
    return out
