"""Canonical labeling and canonical augmentation, across both backends."""

import random
from itertools import permutations

import pytest

from chemgraph import Graph, kernel
from chemgraph import _kernel_py

try:
    from chemgraph import _ckernel
except ImportError:  # pragma: no cover - extension not built
    _ckernel = None

BACKENDS = [_kernel_py] + ([_ckernel] if _ckernel else [])


def _random_maxdeg3_adj(rng, n):
    rows = [0] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rows[u].bit_count() < 3 and rows[v].bit_count() < 3 and rng.random() < 0.6:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return tuple(rows)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_canonical_form_is_permutation_invariant(impl):
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 9)
        adj = _random_maxdeg3_adj(rng, n)
        base = impl.canonical_form(adj)
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = [0] * n
        for v in range(n):
            row = adj[v]
            acc = 0
            while row:
                low = row & -row
                acc |= 1 << perm[(low.bit_length() - 1)]
                row ^= low
            permuted[perm[v]] = acc
        assert impl.canonical_form(tuple(permuted)) == base


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_canonical_form_separates_nonisomorphic(impl):
    """Exhaustive at n=5: canonical forms partition labeled graphs exactly into
    isomorphism classes (checked against explicit permutation orbits)."""
    n = 5
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    graphs = []
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        ok = True
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if max(r.bit_count() for r in rows) <= 3:
            graphs.append(tuple(rows))
    by_form = {}
    for adj in graphs:
        by_form.setdefault(impl.canonical_form(adj), []).append(adj)
    # each labeled graph's orbit under S_5 must be exactly its form bucket
    for form, bucket in by_form.items():
        adj = bucket[0]
        orbit = set()
        for perm in permutations(range(n)):
            rows = [0] * n
            for v in range(n):
                row = adj[v]
                while row:
                    low = row & -row
                    rows[perm[v]] |= 1 << perm[low.bit_length() - 1]
                    row ^= low
            orbit.add(tuple(rows))
        assert orbit == set(bucket), "canonical form bucket is not one isomorphism orbit"


def test_backends_are_bit_identical():
    if _ckernel is None:
        pytest.skip("compiled kernel not built")
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 10)
        adj = _random_maxdeg3_adj(rng, n)
        assert _kernel_py.canonical_form(adj) == _ckernel.canonical_form(adj)
        la, lb = _kernel_py.canonical_labeling(adj), _ckernel.canonical_labeling(adj)
        assert la == lb
        if n < 10:
            assert _kernel_py.accepted_children(adj) == _ckernel.accepted_children(adj)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_degree_cap_enforced(impl):
    star4 = (0b11110, 1, 1, 1, 1)
    with pytest.raises(ValueError, match="degree"):
        impl.canonical_form(star4)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_each_class_generated_exactly_once(impl):
    """Expanding every level by hand never produces a duplicate canonical form."""
    level = [impl.canonical_form((0,))]
    for _ in range(6):
        children = []
        for form in level:
            children.extend(impl.accepted_children(kernel.deserialize(form)))
        assert len(children) == len(set(children))
        level = sorted(children)
    assert len(level) == 64  # connected max-degree-3 graphs on 7 vertices


def test_serialize_round_trip():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert kernel.deserialize(kernel.serialize(g.rows)) == g.rows
