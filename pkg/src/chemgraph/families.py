"""The twelve extremal families and witness graph production.

Each family is a set of chemical graphs specified purely by census rows
parameterized by the order n and size m.  ``family_censuses`` materializes
the exact finite census set of one family at one (n, m); ``realize_census``
produces a concrete witness graph for any realizable census, and
``construct_f1_explicit`` builds the cycle+chords+pendants witness for the
first family directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .census import Census, is_realizable, order_size, vertex_counts
from .graphs import Graph, edge_census, is_chemical_graph, write_graph6


class FamilyId(enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"
    F7 = "F7"
    F8 = "F8"
    F9 = "F9"
    F10 = "F10"
    F11 = "F11"
    F12 = "F12"

    def __str__(self) -> str:
        return self.value


def chemical_size_range(n: int) -> range:
    """Admissible sizes for chemical graphs of order n: n-1 .. (3n-3)/2."""
    return range(n - 1, (3 * n - 3) // 2 + 1)


@dataclass(frozen=True)
class FamilyCensusSet:
    """The censuses a family admits at one (n, m); empty when out of range."""

    family: FamilyId
    n: int
    m: int
    censuses: frozenset[Census]
    reason: str | None = None  # set when empty


def _row(entries) -> Census | None:
    """Build a census from raw row arithmetic; None when any entry is negative
    or fractional (the row does not apply at this (n, m))."""
    values = []
    for e in entries:
        if e != int(e) or e < 0:
            return None
        values.append(int(e))
    return Census(*values)


def _f1_rows(n, m):
    if n % 2 == 0:
        yield ((3 * n - 2 * m) / 2, 0, 0, (4 * m - 3 * n) / 2)
    else:
        yield ((3 * n - 2 * m - 1) / 2, 0, 2, (4 * m - 3 * n - 3) / 2)


def _f3_rows(n, m):
    if n % 2 == 0:
        yield (0, (3 * n - 2 * m) / 2, 0, 0, (4 * m - 3 * n) / 2)
    else:
        yield (1, (3 * n - 2 * m - 3) / 2, 0, 1, (4 * m - 3 * n - 1) / 2)


def _family_rows(fid: FamilyId, n: int, m: int):
    """Yield the raw rows of the family table applicable to (n, m)."""
    if fid is FamilyId.F1:
        for x13, x22, x23, x33 in _f1_rows(n, m):
            yield (0, x13, x22, x23, x33)

    elif fid is FamilyId.F2:
        if m == n - 1:
            yield (2, 0, m - 2, 0, 0)
        elif m == n:
            yield (0, 0, m, 0, 0)
        elif m == n + 1:
            yield (0, 0, m - 5, 4, 1)
        else:
            yield (0, 0, 3 * n - 2 * m - 1, 2, 3 * m - 3 * n - 1)

    elif fid is FamilyId.F3:
        yield from _f3_rows(n, m)

    elif fid is FamilyId.F4:
        if m == n - 1:
            yield (2, 0, m - 2, 0, 0)
        elif 5 * m < 6 * n:
            yield (0, 0, 6 * n - 5 * m, 6 * m - 6 * n, 0)
        else:
            yield (0, 0, 0, 6 * n - 4 * m, 5 * m - 6 * n)

    elif fid is FamilyId.F5:
        if m == n - 1:
            yield (2, 0, m - 2, 0, 0)
        elif m == n:
            yield (0, 0, m, 0, 0)
        elif m == n + 1:
            yield (0, 0, m - 6, 6, 0)
            yield (0, 0, m - 5, 4, 1)
        else:
            for a in range(max(0, 6 * n - 5 * m), 3 * n - 2 * m):
                yield (0, 0, a, 6 * n - 4 * m - 2 * a, 5 * m - 6 * n + a)

    elif fid is FamilyId.F6:
        lo = max(0, -((5 * m - 6 * n) // 3))  # ceil((6n-5m)/3)
        hi = (3 * n - 2 * m) // 2
        for a in range(lo, hi + 1):
            yield (0, a, 0, 6 * n - 4 * m - 4 * a, 5 * m - 6 * n + 3 * a)

    elif fid is FamilyId.F7:
        if m == n - 1:
            yield (2, 0, m - 2, 0, 0)
        elif m == n:
            yield (0, 0, m, 0, 0)
        elif m == n + 1:
            yield (0, 0, m - 5, 4, 1)
            yield (1, 0, m - 7, 3, 3)
            if n >= 8:
                yield (2, 0, m - 9, 2, 5)
        else:
            yield (0, 0, 3 * n - 2 * m - 1, 2, 3 * m - 3 * n - 1)
            yield (1, 0, 3 * n - 2 * m - 3, 1, 3 * m - 3 * n + 1)

    elif fid is FamilyId.F8:
        if m + 1 == n and n in (7, 8, 9):
            yield (2, 0, m - 2, 0, 0)
            yield (3, 0, m - 6, 3, 0)
        elif m == n and n in (7, 8):
            yield (2, 0, m - 7, 4, 1)
        elif n == 7 and m == 8:
            yield (1, 0, 1, 3, 3)
        else:
            q = (3 * n - 2 * m) // 3
            yield (q, 0, m % 3, q, (7 * m - 6 * n) // 3)

    elif fid is FamilyId.F9:
        if 5 * m <= 6 * n + 2:
            t = (2 * m) % 3
            yield (0, (6 * n - 5 * m + t) / 3, 0, (8 * m - 6 * n - 4 * t) / 3, t)
        else:
            yield (0, 0, 0, 6 * n - 4 * m, 5 * m - 6 * n)

    elif fid in (FamilyId.F10, FamilyId.F11):
        if 5 * m <= 6 * n - 2:
            r = m % 3
            if r == 0:
                yield (0, (6 * n - 5 * m) / 3, 0, (8 * m - 6 * n) / 3, 0)
            elif r == 1:
                yield (0, (6 * n - 5 * m - 1) / 3, 1, (8 * m - 6 * n - 2) / 3, 0)
            else:
                yield (0, (6 * n - 5 * m + 1) / 3, 0, (8 * m - 6 * n - 4) / 3, 1)
        elif 5 * m == 6 * n - 1:
            yield (0, 0, 1, m - 1, 0)
        else:
            yield (0, 0, 0, 6 * n - 4 * m, 5 * m - 6 * n)
        if fid is FamilyId.F11:
            if 5 * m <= 6 * n - 2 and m % 3 == 1:
                yield (1, (6 * n - 5 * m - 4) / 3, 0, (8 * m - 6 * n + 1) / 3, 0)
                yield (0, (6 * n - 5 * m + 2) / 3, 0, (8 * m - 6 * n - 8) / 3, 2)
            elif 5 * m == 6 * n - 1:
                yield (0, 1, 0, m - 3, 2)

    elif fid is FamilyId.F12:
        if m == n - 1:
            yield (2, 0, m - 2, 0, 0)
        elif m == n:
            yield (0, 0, m, 0, 0)
        elif m == n + 1:
            if n >= 8:
                yield (2, 0, m - 9, 2, 5)
            yield (1, 1, m - 8, 1, 5)
            yield (1, 0, m - 7, 3, 3)
            yield (0, 1, m - 6, 2, 3)
            yield (0, 0, m - 5, 4, 1)
        else:
            yield (0, 0, 3 * n - 2 * m - 1, 2, 3 * m - 3 * n - 1)
            yield (1, 0, 3 * n - 2 * m - 3, 1, 3 * m - 3 * n + 1)

    else:  # pragma: no cover - FamilyId is a closed enumeration
        raise AssertionError(fid)


def family_censuses(fid: FamilyId, n: int, m: int) -> FamilyCensusSet:
    """The exact census set of one family at (n, m).

    Out-of-range (n, m) yields an empty set with a reason.  Every returned
    census is checked to reproduce (n, m); a row that fails that check would
    be a table transcription bug, so it raises.
    """
    fid = FamilyId(fid)
    if n < 7:
        return FamilyCensusSet(fid, n, m, frozenset(), f"order {n} < 7")
    if m not in chemical_size_range(n):
        return FamilyCensusSet(
            fid, n, m, frozenset(), f"size {m} outside {n - 1}..{(3 * n - 3) // 2}"
        )
    found = set()
    for raw in _family_rows(fid, n, m):
        x = _row(raw)
        if x is None:
            continue
        if order_size(x) != (n, m):
            raise RuntimeError(f"{fid} row {raw} does not have order/size ({n},{m})")
        found.add(x)
    return FamilyCensusSet(fid, n, m, frozenset(found))


def is_member(x: Census, fid: FamilyId) -> bool:
    """Whether the census belongs to the family at its own (n, m)."""
    n, m = order_size(x)
    return Census(*x) in family_censuses(fid, n, m).censuses


class SearchBudgetExceeded(RuntimeError):
    """The realizer ran out of its node budget before deciding."""


def construct_f1_explicit(n: int, m: int) -> Graph:
    """Build the explicit first-family witness for even n.

    Take a cycle on m - n/2 vertices, add m - n chords at a fixed offset,
    and hang a pendant vertex on every cycle vertex not touched by a chord.
    The construction covers n <= m <= 3n/2, which extends one step past the
    chemical size bound into the dense border (at m = 3n/2 it degenerates
    to a cubic cycle-plus-matching with no pendants).  The result is
    validated to be connected with max degree 3 and the first family's
    even-order census row; on validation failure the backtracking realizer
    is used as a fallback.
    """
    if n % 2:
        raise ValueError(f"explicit construction needs even n, got {n}")
    if n < 8:
        raise ValueError(f"order must be at least 8, got {n}")
    if not n <= m <= 3 * n // 2:
        raise ValueError(f"size must satisfy {n} <= m <= {3 * n // 2}, got {m}")

    expected = Census(0, (3 * n - 2 * m) // 2, 0, 0, (4 * m - 3 * n) // 2)

    cycle_len = m - n // 2
    offset = -((n - 2 * m) // 4)  # ceil((2m-n)/4)
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    matched = set()
    for i in range(m - n):
        a, b = i, offset + i
        edges.append((a, b))
        matched.update((a, b))
    nxt = cycle_len
    for v in range(cycle_len):
        if v not in matched:
            edges.append((v, nxt))
            nxt += 1

    try:
        g = Graph(nxt, edges)
        if (
            nxt == n
            and g.m == m
            and g.max_degree() <= 3
            and g.is_connected()
            and edge_census(g) == expected
        ):
            return g
    except ValueError:
        pass
    # Construction failed validation; fall back to the general realizer.
    g = realize_census(expected)
    if g is None:
        raise RuntimeError(f"no witness exists for the first-family census {expected}")
    return g


def realize_census(x: Census, *, node_budget: int = 2_000_000) -> Graph | None:
    """Produce a connected witness graph with census x, or None.

    Returns None exactly when the census fails the realizability
    conditions.  Otherwise a backtracking search over degree-labeled
    vertices with per-edge-type budgets finds a witness; exceeding the
    node budget raises SearchBudgetExceeded instead of returning None.
    """
    x = Census(*x)
    if not is_realizable(x):
        return None
    n1, n2, n3 = vertex_counts(x)
    n = n1 + n2 + n3
    # Degree-3 core first, pendant vertices last: scarcer slots go first.
    targets = [3] * n3 + [2] * n2 + [1] * n1
    budgets = {
        (1, 2): x.x12,
        (1, 3): x.x13,
        (2, 2): x.x22,
        (2, 3): x.x23,
        (3, 3): x.x33,
    }
    rows = [0] * n
    rem = list(targets)
    nodes = 0

    def pair(u: int, v: int) -> tuple[int, int]:
        a, b = targets[u], targets[v]
        return (a, b) if a <= b else (b, a)

    def component_info(start: int) -> tuple[int, bool]:
        """Vertex mask of start's component and whether it has an open slot."""
        seen = 1 << start
        frontier = [start]
        unsat = False
        while frontier:
            v = frontier.pop()
            if rem[v]:
                unsat = True
            new = rows[v] & ~seen
            while new:
                low = new & -new
                seen |= low
                frontier.append(low.bit_length() - 1)
                new ^= low
        return seen, unsat

    def prefix_ok(pivot: int, chosen: tuple[int, ...]) -> bool:
        # Untouched vertices of one target degree are interchangeable (the
        # pivot aside): only the lowest-indexed prefix of each untouched
        # group may be used.
        for v in chosen:
            if rows[v] == 0:
                for u in range(v):
                    if (
                        u != pivot
                        and targets[u] == targets[v]
                        and rows[u] == 0
                        and u not in chosen
                    ):
                        return False
        return True

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(f"realizer exceeded {node_budget} nodes for {x}")
        u = next((v for v in range(n) if rem[v]), None)
        if u is None:
            mask, _ = component_info(0)
            return all(not b for b in budgets.values()) and mask == (1 << n) - 1
        cands = [
            v
            for v in range(n)
            if v != u and rem[v] and not rows[u] >> v & 1 and budgets[pair(u, v)] > 0
        ]
        if len(cands) < rem[u]:
            return False
        # Scarcest edge type first; ties broken by vertex index.
        cands.sort(key=lambda v: (budgets[pair(u, v)], v))
        for chosen in combinations(cands, rem[u]):
            need: dict[tuple[int, int], int] = {}
            for v in chosen:
                key = pair(u, v)
                need[key] = need.get(key, 0) + 1
            if any(budgets[key] < k for key, k in need.items()):
                continue
            if not prefix_ok(u, chosen):
                continue
            for v in chosen:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                rem[v] -= 1
                budgets[pair(u, v)] -= 1
            rem[u] = 0
            # A fully saturated component that is not the whole graph can
            # never be reconnected: prune.
            mask, unsat = component_info(u)
            saturated_dead = not unsat and mask != (1 << n) - 1
            if not saturated_dead and extend():
                return True
            rem[u] = len(chosen)
            for v in chosen:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
                rem[v] += 1
                budgets[pair(u, v)] += 1
        return False

    if not extend():
        # The realizability conditions promise a witness; reaching this point
        # would disprove them, so fail loudly rather than claim None.
        raise RuntimeError(f"census {x} passes realizability but no witness was found")
    g = Graph.from_bitrows(rows)
    assert edge_census(g) == x and g.is_connected()
    return g


def family_atlas_rows(fid: FamilyId, n: int, m: int) -> list[dict]:
    """Atlas export rows: one dict per admissible census, with a witness."""
    out = []
    for x in sorted(family_censuses(fid, n, m).censuses):
        witness = realize_census(x)
        out.append(
            {
                "family": str(fid),
                "n": n,
                "m": m,
                "x12": x.x12,
                "x13": x.x13,
                "x22": x.x22,
                "x23": x.x23,
                "x33": x.x33,
                "witness_graph6": write_graph6(witness) if witness else "",
            }
        )
    return out
