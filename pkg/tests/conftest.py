"""Shared test helpers."""

from __future__ import annotations

import pytest

from chemgraph import Census, order_size


def all_censuses(n: int, m: int) -> list[Census]:
    """Every nonnegative integer 5-vector with component sum m whose derived
    order/size is (n, m).  Independent of the graph enumeration machinery."""
    out = []
    for x12 in range(m + 1):
        for x13 in range(m + 1 - x12):
            for x22 in range(m + 1 - x12 - x13):
                for x23 in range(m + 1 - x12 - x13 - x22):
                    x = Census(x12, x13, x22, x23, m - x12 - x13 - x22 - x23)
                    try:
                        if order_size(x) == (n, m):
                            out.append(x)
                    except ValueError:
                        continue
    return out


@pytest.fixture(scope="session")
def petersen():
    from chemgraph import Graph

    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
