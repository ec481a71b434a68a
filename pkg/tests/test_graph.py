import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcol.graph import (
    DimacsError,
    Graph,
    complete_graph,
    empty_graph,
    full_ins,
    generate_kneser,
    max_degree,
    myciel,
    parse_dimacs,
    queen_graph,
    random_graph,
    to_dimacs,
)


def assert_simple(g):
    for v, nb in enumerate(g.adjacency):
        assert v not in nb
        for w in nb:
            assert v in g.adjacency[w]
    assert np.array_equal(g.degrees, [len(a) for a in g.adjacency])
    assert g.m * 2 == g.degrees.sum()


def test_parse_path():
    g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
    assert (g.n, g.m) == (3, 2)
    assert g.adjacency == (frozenset({1}), frozenset({0, 2}), frozenset({1}))


def test_parse_dedups_mirrored_edge():
    g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1")
    assert (g.n, g.m) == (2, 1)


def test_parse_ignores_comments_and_problem_edge_count():
    g = parse_dimacs("c hello\nc world\np edge 4 17\ne 1 2\ne 1 2\ne 3 4\n\n")
    assert (g.n, g.m) == (4, 2)


@pytest.mark.parametrize("text, lineno, fragment", [
    ("p edge 2 1\ne 1 1", 2, "self-loop"),
    ("p edge 2 1\ne 1 3", 2, "outside"),
    ("p edge 2 1\ne 0 1", 2, "outside"),
    ("p edge 2 1\np edge 2 1", 2, "duplicate problem"),
    ("e 1 2", 1, "before problem"),
    ("p edge 2 1\ne 1 x", 2, "integer"),
    ("p edge 2 1\ne 1", 2, "malformed"),
    ("p edge two 1", 1, "integer"),
    ("p edge 3 1\nq 1 2", 2, "unknown"),
])
def test_parse_errors_name_line(text, lineno, fragment):
    with pytest.raises(DimacsError, match=fragment) as info:
        parse_dimacs(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_parse_missing_problem_line():
    with pytest.raises(DimacsError, match="missing problem line"):
        parse_dimacs("c nothing here\n")


def test_serializer_sorted_one_based():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert to_dimacs(g) == "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n"


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 15).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1),
                                                       st.integers(0, n - 1)), max_size=40))))
def test_roundtrip(case):
    n, pairs = case
    g = Graph.from_edges(n, [(u, v) for u, v in pairs if u != v])
    assert_simple(g)
    h = parse_dimacs(to_dimacs(g))
    assert h.adjacency == g.adjacency
    assert to_dimacs(h) == to_dimacs(g)


def test_kneser_9_4_matches_benchmark_size():
    g = generate_kneser(9, 4)
    assert (g.n, g.m) == (126, 315)


def test_kneser_2_1():
    g = generate_kneser(2, 1)
    assert (g.n, g.m) == (2, 1)


def test_kneser_5_2_is_petersen():
    subsets = list(itertools.combinations(range(5), 2))
    disjoint = sum(1 for a, b in itertools.combinations(subsets, 2) if not set(a) & set(b))
    g = generate_kneser(5, 2)
    assert (g.n, g.m) == (len(subsets), disjoint) == (10, 15)
    assert set(g.degrees.tolist()) == {3}
    assert max_degree(g) == 3


@pytest.mark.parametrize("a,b", [(4, 1), (5, 2), (6, 2), (7, 3), (6, 3), (3, 3)])
def test_kneser_counts(a, b):
    g = generate_kneser(a, b)
    assert_simple(g)
    assert g.n == comb(a, b)
    assert set(g.degrees.tolist()) == {comb(a - b, b)}


def test_kneser_vertex_order_is_lexicographic():
    g = generate_kneser(4, 2)
    # vertex 0 = {1,2}, vertex 5 = {3,4}
    assert g.adjacency[0] == frozenset({5})


def test_kneser_rejects_bad_parameters():
    with pytest.raises(ValueError):
        generate_kneser(3, 4)
    with pytest.raises(ValueError):
        generate_kneser(3, 0)


def test_max_degree():
    assert max_degree(complete_graph(4)) == 3
    assert max_degree(empty_graph(5)) == 0


@pytest.mark.parametrize("g, n, m", [
    (myciel(3), 11, 20), (myciel(4), 23, 71), (myciel(6), 95, 755), (myciel(7), 191, 2360),
    (queen_graph(8, 8), 64, 728), (queen_graph(8, 12), 96, 1368), (queen_graph(9, 9), 81, 1056),
    (full_ins(1, 3), 30, 100), (full_ins(2, 3), 52, 201), (full_ins(3, 3), 80, 346),
    (full_ins(4, 3), 114, 541), (full_ins(5, 3), 154, 792), (full_ins(4, 4), 690, 6650),
])
def test_benchmark_family_sizes(g, n, m):
    # published vertex/edge counts of the benchmark families
    assert (g.n, g.m) == (n, m)
    assert_simple(g)


def test_random_graph_is_simple_and_seeded():
    g1 = random_graph(30, 0.2, np.random.default_rng(5))
    g2 = random_graph(30, 0.2, np.random.default_rng(5))
    assert g1 == g2
    assert_simple(g1)


def test_graph_immutable():
    g = complete_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4
