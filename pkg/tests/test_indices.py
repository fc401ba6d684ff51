"""Built-in index definitions, evaluation, complements, V-profiles."""

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chemgraph import (
    Census,
    IndexDefinition,
    builtin,
    builtin_names,
    complement,
    evaluate,
    index_from_json,
    index_to_json,
    lookup,
    v_profile,
)
from chemgraph.indices import PAIRS, RR_RANDIC


def test_exactly_33_builtins():
    assert len(builtin_names()) == 33


def test_randic_coefficients():
    f = builtin("Randić")
    assert f.c12 == pytest.approx(1 / math.sqrt(2))
    assert f.c33 == pytest.approx(1 / 3)


def test_zagreb1_coefficients():
    assert builtin("Zagreb1").coeffs == (3, 4, 4, 5, 6)


def test_sigma_coefficients():
    assert builtin("Sigma").coeffs == (1, 4, 0, 1, 0)


def test_every_builtin_matches_its_closed_form():
    # spot-check a second evaluation route: coefficient(i, j) against the pair list
    for name in builtin_names():
        f = builtin(name)
        for (i, j), c in zip(PAIRS, f.coeffs):
            assert f.coefficient(i, j) == c
            assert f.coefficient(j, i) == c


def test_lookup_is_case_and_accent_insensitive():
    assert builtin("randic") is builtin("Randić")
    assert builtin("RANDIC") is builtin("Randić")
    assert lookup("rrrandic") is RR_RANDIC
    with pytest.raises(KeyError, match="available"):
        builtin("Wiener")
    with pytest.raises(KeyError):
        builtin("rrRandić")  # not one of the 33


def test_evaluate_examples():
    assert evaluate(builtin("Zagreb1"), Census(0, 0, 7, 0, 0)) == 28
    assert evaluate(builtin("Randić"), Census(2, 0, 4, 0, 0)) == pytest.approx(
        math.sqrt(2) + 2
    )
    assert evaluate(builtin("Albertson"), Census(0, 3, 0, 0, 6)) == 6


def test_complement_negates_and_is_involutive():
    f = builtin("Zagreb1")
    g = complement(f)
    assert g.c12 == -3
    assert complement(g).coeffs == f.coeffs
    x = Census(1, 2, 3, 4, 5)
    assert evaluate(g, x) == -evaluate(f, x)


@given(
    st.tuples(*[st.integers(0, 30)] * 5),
    st.tuples(*[st.integers(0, 30)] * 5),
    st.sampled_from(builtin_names()),
)
@settings(max_examples=150)
def test_evaluate_is_linear(xs, ys, name):
    f = builtin(name)
    total = Census(*(a + b for a, b in zip(xs, ys)))
    assert evaluate(f, total) == pytest.approx(
        evaluate(f, Census(*xs)) + evaluate(f, Census(*ys))
    )


def test_v_profile_zagreb2():
    p = v_profile(builtin("Zagreb2"))
    assert (p.v1, p.v6, p.v7, p.v8) == (2, 1, 2, 2)
    assert all(p.sign_of(k) == 1 for k in ("v1", "v6", "v7", "v8"))


def test_v_profile_zagreb1_v7_vanishes():
    assert v_profile(builtin("Zagreb1")).sign_of("v7") == 0


def test_v_profile_sigma():
    p = v_profile(builtin("Sigma"))
    assert p.sign_of("v5") == 0
    assert p.sign_of("v1") == 1 and p.sign_of("v2") == 1


def test_v_profile_complement_is_not_plain_negation():
    """The min terms stop the V-values from simply flipping sign; each entry
    must instead match an independent recomputation from the complement's
    own coefficients."""
    for name in ("Randić", "aZagreb", "ABC", "Extended"):
        f = builtin(name)
        g = complement(f)
        p = v_profile(g)
        c = g.coefficient
        assert p.v1 == pytest.approx(
            c(1, 3) - c(2, 2)
            + min(c(3, i) - c(2, i) for i in (1, 2, 3))
            + min(c(3, j) - c(2, j) for j in (2, 3))
        )
        assert p.v2 == pytest.approx(c(1, 3) - c(1, 2) + min(c(2, i) - c(3, i) for i in (2, 3)))
        assert p.v5 == pytest.approx(c(1, 3) - 4 * c(2, 3) + 3 * c(3, 3))
    # and the naive negation is indeed false in general:
    assert v_profile(complement(builtin("Randić"))).v1 != pytest.approx(
        -v_profile(builtin("Randić")).v1
    )


def test_v_profile_derived_combinations():
    p = v_profile(builtin("ABC"))
    assert p.s2 == pytest.approx(p.v5 + p.v7 - 2 * p.v6)
    assert p.s4 == pytest.approx(p.v5 + p.v7 - 4 * p.v6)


def test_v_profile_requires_positive_eps():
    with pytest.raises(ValueError):
        v_profile(builtin("Sigma"), eps=0)


def test_index_json_round_trip():
    f = builtin("GouravaPC")
    data = json.loads(json.dumps(index_to_json(f)))
    g = index_from_json(data)
    assert g.name == f.name and g.coeffs == f.coeffs
    with pytest.raises(ValueError):
        index_from_json({"name": "x", "c": [1, 2, 3]})


def test_non_finite_coefficients_rejected():
    with pytest.raises(ValueError):
        IndexDefinition("bad", 1.0, float("nan"), 0.0, 0.0, 0.0)
