"""Graph type, edge census, chemical validation, graph6 round-trips."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chemgraph import (
    Census,
    Graph,
    Graph6Error,
    complete_graph,
    cycle_graph,
    edge_census,
    is_chemical_graph,
    parse_graph6,
    path_graph,
    write_graph6,
)


def test_census_of_p7():
    assert edge_census(path_graph(7)) == Census(2, 0, 4, 0, 0)


def test_census_of_c8():
    assert edge_census(cycle_graph(8)) == Census(0, 0, 8, 0, 0)


def test_census_rejects_degree_4():
    star = Graph(5, [(0, i) for i in range(1, 5)])
    with pytest.raises(ValueError, match="degree 4"):
        edge_census(star)


def test_census_rejects_k2():
    with pytest.raises(ValueError, match=r"\(1,1\)-edge"):
        edge_census(Graph(2, [(0, 1)]))


def test_census_is_isomorphism_invariant():
    rng = random.Random(7)
    g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 1), (7, 4)])
    x = edge_census(g)
    for _ in range(25):
        perm = list(range(8))
        rng.shuffle(perm)
        assert edge_census(g.relabel(perm)) == x


def test_chemical_check_examples(petersen):
    assert is_chemical_graph(path_graph(7))
    k4 = complete_graph(4)
    verdict = is_chemical_graph(k4)
    assert not verdict and "order" in verdict.reason
    verdict = is_chemical_graph(petersen)  # 3-regular on 10 vertices: m = 15 > 13
    assert not verdict and "size" in verdict.reason


def test_chemical_check_connectivity_first():
    g = Graph(8, [(i, i + 1) for i in range(6)])  # vertex 7 isolated
    verdict = is_chemical_graph(g)
    assert not verdict and verdict.reason == "not connected"


def test_graph_vertex_limit():
    with pytest.raises(ValueError):
        Graph(65)


# --- graph6 ------------------------------------------------------------

def _encode_graph6_reference(n, edges):
    """Independent graph6 encoder built directly from the format description:
    gather the column-major upper-triangle bits, pad to a multiple of six,
    and add 63 to each 6-bit group."""
    adj = set()
    for u, v in edges:
        adj.add((min(u, v), max(u, v)))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [bits[i : i + 6] for i in range(0, len(bits), 6)]
    body = "".join(chr(sum(b << (5 - i) for i, b in enumerate(c)) + 63) for c in chunks)
    return chr(n + 63) + body


def test_k4_encodes_to_c_tilde():
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    assert _encode_graph6_reference(4, edges) == "C~"
    assert write_graph6(complete_graph(4)) == "C~"


def test_writer_matches_reference_encoder():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(1, 12)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.35
        ]
        assert write_graph6(Graph(n, edges)) == _encode_graph6_reference(n, edges)


def test_parse_accepts_header():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_parse_trailing_garbage():
    with pytest.raises(Graph6Error, match="trailing"):
        parse_graph6("C~~")


def test_parse_truncated():
    with pytest.raises(Graph6Error, match="truncated"):
        parse_graph6("E")


def test_parse_out_of_range_character():
    with pytest.raises(Graph6Error, match="range"):
        parse_graph6("C" + chr(30))


def test_parse_empty_and_zero():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("?")  # zero vertices


def test_parse_rejects_nonzero_padding():
    # n=3 uses 3 triangle bits, so the low 3 bits of the byte are padding
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("B" + chr(63 + 1))


def test_long_form_vertex_count_round_trip():
    g = path_graph(64)
    s = write_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_long_form_above_limit_rejected():
    # n = 65 encoded in the '~' three-byte form
    n = 65
    prefix = "~" + chr((n >> 12) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    with pytest.raises(Graph6Error, match="engine limit"):
        parse_graph6(prefix + "?" * 100)


@given(st.integers(1, 13), st.data())
@settings(max_examples=150, deadline=None)
def test_round_trip_random_graphs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    g = Graph(n, sorted(chosen))
    assert parse_graph6(write_graph6(g)) == g


@given(st.integers(1, 13), st.data())
@settings(max_examples=100, deadline=None)
def test_write_parse_write_is_identity_on_strings(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    s = write_graph6(Graph(n, sorted(chosen)))
    assert write_graph6(parse_graph6(s)) == s


def test_round_trip_on_all_enumerated_graphs_up_to_11():
    from chemgraph import enumerate_connected_maxdeg3

    for n in (7, 9, 11):
        for g in enumerate_connected_maxdeg3(n):
            assert parse_graph6(write_graph6(g)) == g
