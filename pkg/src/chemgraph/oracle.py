"""Exhaustive ground truth: enumerate connected max-degree-3 graphs.

The enumerator produces exactly one representative per isomorphism class
by canonical augmentation (see the kernel modules) and is the oracle that
every family characterization is checked against: collect the censuses of
all graphs of a given order and size, evaluate an index on each census,
and read off the true extremal census sets.

The augmentation forest is embarrassingly parallel: any level of canonical
representatives splits into independent subtrees, so workers expand
disjoint root sets and the merged stream is sorted into a deterministic
order regardless of the worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Iterator

from . import kernel
from .census import Census
from .graphs import Graph, edge_census, write_graph6
from .indices import IndexDefinition, evaluate

#: Orders above this are refused outright (bitmask representation limit).
ENGINE_LIMIT = 64

#: Parent levels at least this large are worth farming out to workers.
_MIN_PARALLEL_LEVEL = 16

#: Relative tolerance for "these censuses tie for the optimum".
VALUE_RTOL = 1e-9

_K1_FORM = kernel.serialize((0,))


def default_workers() -> int:
    env = os.environ.get("CHEMGRAPH_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _check_order(n: int) -> None:
    if not 1 <= n <= ENGINE_LIMIT:
        raise ValueError(f"order must be in 1..{ENGINE_LIMIT}, got {n}")


def _children_of_form(form: bytes) -> list[bytes]:
    return kernel.accepted_children(kernel.deserialize(form))


# order -> sorted canonical forms of that order; levels build on each other.
_LEVEL_CACHE: dict[int, list[bytes]] = {1: [_K1_FORM]}


def _forms_at_order(n: int, workers: int | None = None) -> list[bytes]:
    """Sorted canonical forms of all connected max-degree-3 graphs of order n."""
    _check_order(n)
    workers = workers or default_workers()
    top = max(k for k in _LEVEL_CACHE if k <= n)
    level = _LEVEL_CACHE[top]
    for k in range(top + 1, n + 1):
        if workers > 1 and len(level) >= _MIN_PARALLEL_LEVEL:
            with multiprocessing.Pool(min(workers, len(level))) as pool:
                chunks = pool.map(_children_of_form, level, chunksize=8)
        else:
            chunks = map(_children_of_form, level)
        nxt: list[bytes] = []
        for chunk in chunks:
            nxt.extend(chunk)
        nxt.sort()
        _LEVEL_CACHE[k] = nxt
        level = nxt
    return _LEVEL_CACHE[n]


def enumerate_connected_maxdeg3(n: int, workers: int | None = None) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of connected graphs with max
    degree 3 and order n, over all sizes, in a deterministic order."""
    for form in _forms_at_order(n, workers):
        yield Graph.from_bitrows(kernel.deserialize(form))


@dataclass(frozen=True)
class CensusClass:
    """All enumeration facts for one census at one (n, m)."""

    census: Census
    graph_count: int
    witness: str  # graph6 of the first graph seen with this census


# (order, size) -> {census: CensusClass}; grows as orders get enumerated.
_TABLE_CACHE: dict[int, dict[int, dict[Census, CensusClass]]] = {}


def _census_table(n: int, workers: int | None = None) -> dict[int, dict[Census, CensusClass]]:
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    table: dict[int, dict[Census, CensusClass]] = {}
    for g in enumerate_connected_maxdeg3(n, workers):
        x = edge_census(g)
        by_census = table.setdefault(g.m, {})
        entry = by_census.get(x)
        if entry is None:
            by_census[x] = CensusClass(x, 1, write_graph6(g))
        else:
            by_census[x] = CensusClass(x, entry.graph_count + 1, entry.witness)
    _TABLE_CACHE[n] = table
    return table


def _check_chemical_range(n: int, m: int) -> None:
    if not 7 <= n <= ENGINE_LIMIT:
        raise ValueError(f"order must be in 7..{ENGINE_LIMIT}, got {n}")
    if not n - 1 <= m <= (3 * n - 3) // 2:
        raise ValueError(f"size must be in {n - 1}..{(3 * n - 3) // 2} for n={n}, got {m}")


def census_atlas(n: int, m: int, workers: int | None = None) -> frozenset[Census]:
    """The exact set of censuses realized by some chemical graph of order n, size m."""
    _check_chemical_range(n, m)
    return frozenset(_census_table(n, workers).get(m, {}))


@dataclass(frozen=True)
class ExtremalReport:
    """Extremal census sets of one index over one (n, m) class."""

    index: str
    n: int
    m: int
    direction: str
    optimum: float
    optimal_censuses: tuple[Census, ...]
    witnesses: dict[Census, str] = field(compare=False)
    graph_count: int = 0

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "n": self.n,
            "m": self.m,
            "direction": self.direction,
            "optimum": self.optimum,
            "optimal_censuses": [list(x) for x in self.optimal_censuses],
            "witnesses": {str(list(x)): g6 for x, g6 in self.witnesses.items()},
            "graph_count": self.graph_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def csv_rows(self) -> list[dict]:
        return [
            {
                "index": self.index,
                "n": self.n,
                "m": self.m,
                "direction": self.direction,
                "optimum": self.optimum,
                "x12": x.x12,
                "x13": x.x13,
                "x22": x.x22,
                "x23": x.x23,
                "x33": x.x33,
                "witness_graph6": self.witnesses[x],
                "graph_count": self.graph_count,
            }
            for x in self.optimal_censuses
        ]


def extremal_censuses(
    f: IndexDefinition,
    n: int,
    m: int,
    direction: str = "max",
    workers: int | None = None,
    rtol: float = VALUE_RTOL,
) -> ExtremalReport:
    """Brute-force extremal censuses of f over all chemical graphs of order n, size m.

    Censuses are compared exactly; values within `rtol` relative tolerance
    of the best are counted as ties (with a floor of 1 so an optimum of
    exactly zero does not collapse the tolerance).
    """
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    _check_chemical_range(n, m)
    classes = _census_table(n, workers).get(m, {})
    if not classes:
        raise RuntimeError(f"no chemical graphs of order {n} and size {m}")
    values = {x: evaluate(f, x) for x in classes}
    best = max(values.values()) if direction == "max" else min(values.values())
    cutoff = rtol * max(1.0, abs(best))
    optimal = tuple(sorted(x for x, v in values.items() if abs(v - best) <= cutoff))
    return ExtremalReport(
        index=f.name,
        n=n,
        m=m,
        direction=direction,
        optimum=best,
        optimal_censuses=optimal,
        witnesses={x: classes[x].witness for x in optimal},
        graph_count=sum(c.graph_count for c in classes.values()),
    )
