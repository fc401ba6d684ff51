"""Census arithmetic: vertex counts, order/size, transforms, realizability."""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chemgraph import (
    Census,
    InconsistentCensusError,
    TransformDomainError,
    TransformVector,
    apply_transform,
    is_nm_preserving,
    is_realizable,
    order_size,
    vertex_counts,
)
from chemgraph.census import COND_X33_CLIQUE, census_from_json, census_to_json

from conftest import all_censuses


def test_vertex_counts_path():
    assert vertex_counts(Census(2, 0, 4, 0, 0)) == (2, 5, 0)


def test_vertex_counts_dense_example():
    assert vertex_counts(Census(0, 3, 0, 0, 6)) == (3, 0, 5)


def test_vertex_counts_integrality_error():
    with pytest.raises(InconsistentCensusError):
        vertex_counts(Census(0, 1, 0, 0, 5))  # n3 would be 11/3


def test_order_size_examples():
    assert order_size(Census(2, 0, 4, 0, 0)) == (7, 6)
    assert order_size(Census(0, 3, 0, 0, 6)) == (8, 9)
    assert order_size(Census(0, 0, 4, 2, 5)) == (9, 11)


def test_preserving_vectors_from_theorem_proofs():
    assert is_nm_preserving(TransformVector(0, 1, 0, -4, 3))
    assert is_nm_preserving(TransformVector(0, 0, 1, -2, 1))
    assert not is_nm_preserving(TransformVector(1, 0, 0, 0, 0))


def test_apply_transform_componentwise():
    x = Census(0, 3, 0, 4, 2)
    assert apply_transform(x, TransformVector(0, 1, 0, -4, 3), 1) == Census(0, 4, 0, 0, 5)
    assert apply_transform(x, TransformVector(0, 1, 0, -4, 3), 0) == x


def test_apply_transform_rejects_negative_components():
    with pytest.raises(TransformDomainError):
        apply_transform(Census(0, 0, 1, 0, 0), TransformVector(0, 0, -1, 2, -1), 2)


# Integer basis of the preservation lattice (rank 3), used to sample
# preserving vectors without going through the predicate under test.
_PRESERVING_BASIS = (
    TransformVector(0, 1, 0, -4, 3),
    TransformVector(0, 0, 1, -2, 1),
    TransformVector(1, 0, -3, 1, 1),
)


def _random_preserving(rng: random.Random) -> TransformVector:
    while True:
        coeffs = [rng.randint(-2, 2) for _ in range(3)]
        vec = TransformVector(
            *(
                sum(c * b[i] for c, b in zip(coeffs, _PRESERVING_BASIS))
                for i in range(5)
            )
        )
        if any(vec):
            return vec


def test_preserving_transforms_keep_order_size():
    rng = random.Random(20240811)
    base = [x for n in range(7, 10) for m in range(n - 1, (3 * n - 3) // 2 + 1)
            for x in all_censuses(n, m)]
    checked = 0
    while checked < 1000:
        x = rng.choice(base)
        a = _random_preserving(rng)
        assert is_nm_preserving(a)
        k = rng.randint(-3, 3)
        try:
            y = apply_transform(x, a, k)
        except TransformDomainError:
            continue
        assert order_size(y) == order_size(x)
        # transforming back with -k is the identity
        assert apply_transform(y, a, -k) == x
        checked += 1


def test_preservation_predicate_exhaustive_box():
    """Every vector in the +-3 box agrees with exact rational evaluation."""
    weights = (Fraction(3, 2), Fraction(4, 3), Fraction(1), Fraction(5, 6), Fraction(2, 3))
    for entries in product(range(-3, 4), repeat=5):
        a = TransformVector(*entries)
        expected = (
            sum(w * e for w, e in zip(weights, entries)) == 0 and sum(entries) == 0
        )
        assert is_nm_preserving(a) == expected, a


def test_realizable_examples():
    assert is_realizable(Census(2, 0, 4, 0, 0))
    assert is_realizable(Census(0, 3, 0, 0, 6))
    res = is_realizable(Census(0, 0, 5, 2, 2))
    assert not res
    assert COND_X33_CLIQUE in res.violations  # n3 = 2 allows at most one (3,3)-edge


def test_realizable_respects_chemical_gate():
    x = Census(2, 0, 2, 0, 0)  # a path on 5 vertices: too small to be chemical
    assert not is_realizable(x)
    assert is_realizable(x, chemical=False)


@given(st.lists(st.integers(0, 50), min_size=5, max_size=5))
@settings(max_examples=200)
def test_census_json_round_trip(values):
    x = Census(*values)
    assert census_from_json(census_to_json(x)) == x


def test_census_json_rejects_bad_payloads():
    with pytest.raises(ValueError):
        census_from_json([1, 2, 3])
    with pytest.raises(ValueError):
        census_from_json([1, 2, 3, 4, -1])
    with pytest.raises(ValueError):
        census_from_json([1, 2, 3, 4, 5.5])
