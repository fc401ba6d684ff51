"""Exact arithmetic on edge-census vectors.

An edge census (x12, x13, x22, x23, x33) counts the edges of a connected
graph with maximum degree 3 by the degrees of their endpoints.  Everything
in this module is integer arithmetic: vertex counts and the order/size of
the underlying graph are linear functions of the census, count-preserving
transforms form an integer lattice, and realizability (does any chemical
graph have this census?) is a crisp system of inequalities.
"""

from __future__ import annotations

from typing import NamedTuple


class InconsistentCensusError(ValueError):
    """The census does not correspond to integer vertex counts."""


class TransformDomainError(ValueError):
    """A transform would push some census component below zero."""


class Census(NamedTuple):
    """Counts of (i,j)-edges, i.e. edges whose endpoint degrees are {i, j}."""

    x12: int
    x13: int
    x22: int
    x23: int
    x33: int

    def __str__(self) -> str:
        return f"({self.x12},{self.x13},{self.x22},{self.x23},{self.x33})"


class VertexCounts(NamedTuple):
    """Number of vertices of degree 1, 2 and 3."""

    n1: int
    n2: int
    n3: int


class TransformVector(NamedTuple):
    """Integer shift applied componentwise to a census, scaled by a step k."""

    a12: int
    a13: int
    a22: int
    a23: int
    a33: int


def vertex_counts(x: Census) -> VertexCounts:
    """Recover (n1, n2, n3) from a census.

    Each degree-1 vertex contributes one edge end, each degree-2 vertex two,
    each degree-3 vertex three, so the counts are fixed linear functions of
    the census.  Raises InconsistentCensusError when a division does not
    come out integral (no graph can have such a census).
    """
    x = Census(*x)
    if any(c < 0 for c in x):
        raise InconsistentCensusError(f"negative census component in {x}")
    n1 = x.x12 + x.x13
    twice_n2 = x.x12 + 2 * x.x22 + x.x23
    thrice_n3 = x.x13 + x.x23 + 2 * x.x33
    if twice_n2 % 2:
        raise InconsistentCensusError(f"inconsistent census {x}: n2 = {twice_n2}/2")
    if thrice_n3 % 3:
        raise InconsistentCensusError(f"inconsistent census {x}: n3 = {thrice_n3}/3")
    return VertexCounts(n1, twice_n2 // 2, thrice_n3 // 3)


def order_size(x: Census) -> tuple[int, int]:
    """Return (n, m): the order and size of any graph with census x."""
    counts = vertex_counts(x)
    return counts.n1 + counts.n2 + counts.n3, sum(Census(*x))


def is_nm_preserving(a: TransformVector) -> bool:
    """True when shifting any census by a leaves its order and size unchanged.

    The order condition is (3/2)a12 + (4/3)a13 + a22 + (5/6)a23 + (2/3)a33 = 0,
    checked exactly after scaling through by 6; the size condition is a zero
    component sum.
    """
    a = TransformVector(*a)
    order_scaled = 9 * a.a12 + 8 * a.a13 + 6 * a.a22 + 5 * a.a23 + 4 * a.a33
    return order_scaled == 0 and sum(a) == 0


def apply_transform(x: Census, a: TransformVector, k: int) -> Census:
    """Return the census x + k*a, componentwise."""
    shifted = Census(*(xi + k * ai for xi, ai in zip(Census(*x), TransformVector(*a))))
    if any(c < 0 for c in shifted):
        raise TransformDomainError(
            f"transform leaves census cone: {x} + {k}*{tuple(a)} = {tuple(shifted)}"
        )
    return shifted


def _delta(v: int) -> int:
    return 1 if v >= 1 else 0


class RealizabilityResult(NamedTuple):
    """Outcome of the realizability test, with the violated conditions."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


#: Condition identifiers reported by is_realizable.
COND_X33_CLIQUE = "x33-clique-bound"        # x33 <= n3(n3-1)/2 when n3 in {1,2,3}
COND_X22_CLIQUE = "x22-clique-bound"        # x22 <= n2(n2-1)/2 when n2 in {1,2}
COND_X23_BIPARTITE = "x23-bipartite-bound"  # x23 <= n2*n3 when n2 in {1,2}, n3 = 1
COND_X23_LOWER = "x23-lower"                # x23 >= d(n2)+d(n3)-1
COND_X23_X33_LOWER = "x23+x33-lower"        # x23+x33 >= n3+d(n2)-1
COND_X22_X23_LOWER = "x22+x23-lower"        # x22+x23 >= n2+d(n3)-1
COND_SIZE_LOWER = "size-lower"              # m >= n-1
COND_INCONSISTENT = "inconsistent-census"
COND_CHEMICAL_ORDER = "order-below-chemical"   # n >= 7
COND_CHEMICAL_SIZE = "size-above-chemical"     # 2m <= 3n-3


def is_realizable(x: Census, *, chemical: bool = True) -> RealizabilityResult:
    """Decide whether some connected max-degree-3 graph has census x.

    The test is a closed system of inequalities on the census and its derived
    vertex counts; it is necessary and sufficient on the chemical range
    (n >= 7, m <= (3n-3)/2), which the default `chemical` gate enforces.
    With the gate off the inequalities are still checked, but sufficiency
    outside the chemical range is not promised.
    """
    x = Census(*x)
    try:
        n1, n2, n3 = vertex_counts(x)
    except InconsistentCensusError:
        return RealizabilityResult(False, (COND_INCONSISTENT,))
    n = n1 + n2 + n3
    m = sum(x)

    bad: list[str] = []
    if chemical:
        if n < 7:
            bad.append(COND_CHEMICAL_ORDER)
        if 2 * m > 3 * n - 3:
            bad.append(COND_CHEMICAL_SIZE)
    if n3 in (1, 2, 3) and 2 * x.x33 > n3 * (n3 - 1):
        bad.append(COND_X33_CLIQUE)
    if n2 in (1, 2) and 2 * x.x22 > n2 * (n2 - 1):
        bad.append(COND_X22_CLIQUE)
    if n2 in (1, 2) and n3 == 1 and x.x23 > n2 * n3:
        bad.append(COND_X23_BIPARTITE)
    if x.x23 < _delta(n2) + _delta(n3) - 1:
        bad.append(COND_X23_LOWER)
    if x.x23 + x.x33 < n3 + _delta(n2) - 1:
        bad.append(COND_X23_X33_LOWER)
    if x.x22 + x.x23 < n2 + _delta(n3) - 1:
        bad.append(COND_X22_X23_LOWER)
    if m < n - 1:
        bad.append(COND_SIZE_LOWER)
    return RealizabilityResult(not bad, tuple(bad))


def census_to_json(x: Census) -> list[int]:
    """Serialize a census as the JSON array [x12, x13, x22, x23, x33]."""
    return list(Census(*x))


def census_from_json(data) -> Census:
    """Parse a census from a JSON array of five nonnegative integers."""
    if not isinstance(data, (list, tuple)) or len(data) != 5:
        raise ValueError(f"census must be a 5-element array, got {data!r}")
    values = []
    for item in data:
        if isinstance(item, bool) or not isinstance(item, int):
            raise ValueError(f"census components must be integers, got {item!r}")
        if item < 0:
            raise ValueError(f"census components must be nonnegative, got {item}")
        values.append(item)
    return Census(*values)
