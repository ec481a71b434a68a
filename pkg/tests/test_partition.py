import numpy as np
import pytest
from conftest import objective_from_scratch
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcol.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from eqcol.partition import (
    EquityError,
    InvalidMove,
    Partition,
    format_coloring,
    parse_coloring,
    verify_eqcol,
)


def c5_split():
    # classes {0,1,2} / {3,4}
    return Partition.from_assignment(cycle_graph(5), 2, [0, 0, 0, 1, 1])


def test_from_assignment_c5():
    s = c5_split()
    assert s.objective == 3 == objective_from_scratch(s.graph, s.color_of)
    assert s.class_size.tolist() == [3, 2]
    # gamma[v][c] = neighbors of v in class c
    assert s.gamma.tolist() == [[1, 1], [2, 0], [1, 1], [1, 1], [1, 1]]


def test_from_assignment_edgeless():
    assert Partition.from_assignment(empty_graph(4), 2, [0, 0, 1, 1]).objective == 0


def test_from_assignment_rejects_inequity():
    with pytest.raises(EquityError, match="4.*1|1.*4"):
        Partition.from_assignment(cycle_graph(5), 2, [0, 1, 1, 1, 1])


@pytest.mark.parametrize("k, colors", [(0, [0] * 5), (6, list(range(5))), (2, [0, 1, 2, 0, 1]),
                                       (2, [0, 1, 0])])
def test_from_assignment_rejects_bad_input(k, colors):
    with pytest.raises(ValueError):
        Partition.from_assignment(cycle_graph(5), k, colors)


def test_conflicting_set():
    assert c5_split().conflicting_set() == {0, 1, 2, 3, 4}
    proper = Partition.from_assignment(cycle_graph(5), 3, [0, 1, 0, 1, 2])
    assert proper.conflicting_set() == set()
    assert Partition.from_assignment(complete_graph(4), 4, [0, 1, 2, 3]).conflicting_set() == set()


def test_equity_sets():
    assert c5_split().equity_sets() == ({0}, {1})
    s = Partition.from_assignment(empty_graph(4), 2, [0, 0, 1, 1])
    assert s.equity_sets() == (set(), {0, 1})
    s = Partition.from_assignment(empty_graph(7), 3, [1, 1, 1, 0, 0, 2, 2])
    assert s.equity_sets() == ({1}, {0, 2})


def test_delta_1move_c5():
    s = c5_split()
    assert s.delta_1move(1, 1) == -2
    moved = s.color_of.copy()
    moved[1] = 1
    assert objective_from_scratch(s.graph, moved) - 3 == -2
    assert s.objective == 3  # not mutated


def test_delta_1move_isolated_and_k4():
    g = Graph.from_edges(3, [(0, 1)])
    s = Partition.from_assignment(g, 2, [0, 0, 1])
    assert s.delta_1move(2, 0) == 0
    k4 = Partition.from_assignment(complete_graph(4), 2, [0, 0, 1, 1])
    for v in range(4):
        # 2 neighbors across, 1 at home: sizes become (1, 3) and f goes 2 -> 3
        moved = k4.color_of.copy()
        moved[v] = 1 - moved[v]
        assert k4.delta_1move(v, moved[v]) == 1 == objective_from_scratch(k4.graph, moved) - 2


def test_delta_1move_same_class_rejected():
    with pytest.raises(InvalidMove):
        c5_split().delta_1move(0, 0)


def test_delta_2exchange_c5():
    s = c5_split()
    assert s.delta_2exchange(0, 3) == 0
    swapped = s.color_of.copy()
    swapped[[0, 3]] = swapped[[3, 0]]
    assert objective_from_scratch(s.graph, swapped) == 3


def test_delta_2exchange_adjacent_pair_counts_edge_once():
    # path 0-1-2-3, classes {0,1}/{2,3}: swapping the adjacent 1 and 2 gives {0,2}/{1,3}
    s = Partition.from_assignment(path_graph(4), 2, [0, 0, 1, 1])
    assert s.objective == 2
    assert s.delta_2exchange(1, 2) == objective_from_scratch(s.graph, [0, 1, 0, 1]) - 2 == -2


def test_delta_2exchange_misc():
    s = Partition.from_assignment(empty_graph(4), 2, [0, 0, 1, 1])
    assert s.delta_2exchange(0, 2) == 0
    k4 = Partition.from_assignment(complete_graph(4), 2, [0, 0, 1, 1])
    assert all(k4.delta_2exchange(v, u) == 0 for v in (0, 1) for u in (2, 3))
    with pytest.raises(InvalidMove):
        k4.delta_2exchange(0, 1)


def test_apply_1move_c5():
    s = c5_split()
    assert s.apply_1move(1, 1) == -2
    assert s.class_size.tolist() == [2, 3]
    assert s.objective == 1
    assert s.equity_sets() == ({1}, {0})
    s.check()


def test_apply_1move_rejects_when_k_divides_n():
    s = Partition.from_assignment(empty_graph(4), 2, [0, 0, 1, 1])
    before = s.color_of.copy()
    with pytest.raises(InvalidMove):
        s.apply_1move(0, 1)
    assert np.array_equal(s.color_of, before)


def test_apply_1move_rejects_between_large_classes():
    s = Partition.from_assignment(empty_graph(5), 3, [0, 0, 1, 1, 2])
    with pytest.raises(InvalidMove):
        s.apply_1move(0, 1)
    with pytest.raises(InvalidMove):
        s.apply_1move(4, 0)  # from a small class
    s.check()


def test_apply_2exchange_c5():
    s = c5_split()
    s.apply_2exchange(0, 3)
    assert s.classes() == [[1, 2, 3], [0, 4]]
    assert s.objective == 3
    s.check()


def test_apply_2exchange_isolated_and_k4():
    s = Partition.from_assignment(empty_graph(4), 2, [0, 0, 1, 1])
    s.apply_2exchange(0, 3)
    assert s.objective == 0
    k4 = Partition.from_assignment(complete_graph(4), 2, [0, 0, 1, 1])
    k4.apply_2exchange(1, 2)
    assert k4.objective == 2
    with pytest.raises(InvalidMove):
        k4.apply_2exchange(0, 2)  # now same class


def test_verify_eqcol():
    c5 = cycle_graph(5)
    assert verify_eqcol(c5, Partition.from_assignment(c5, 3, [0, 1, 0, 1, 2]))
    assert not verify_eqcol(c5, c5_split())
    k4 = complete_graph(4)
    assert verify_eqcol(k4, Partition.from_assignment(k4, 4, [0, 1, 2, 3]))


def test_coloring_roundtrip():
    s = c5_split()
    text = format_coloring(s)
    assert text.splitlines()[0] == "s 2 3"
    assert text.splitlines()[1:] == ["1 1", "2 1", "3 1", "4 2", "5 2"]
    back = parse_coloring(text, s.graph)
    assert np.array_equal(back.color_of, s.color_of)


@pytest.mark.parametrize("text", ["1 1\n", "s 2 0\n1 1\n", "s 2 0\n1 1\n1 2\n2 1\n3 2\n4 2\n5 1\n",
                                  "s 2 0\n9 1\n", "s 2 0 7\n"])
def test_coloring_parse_errors(text):
    with pytest.raises(ValueError):
        parse_coloring(text, cycle_graph(5))


# --------------------------------------------------------------------------
# property tests: random move sequences against from-scratch recomputation


@st.composite
def partitions_and_moves(draw):
    n = draw(st.integers(2, 10))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=30))
    g = Graph.from_edges(n, [(u, v) for u, v in pairs if u != v])
    k = draw(st.integers(1, n))
    order = draw(st.permutations(range(n)))
    colors = np.empty(n, dtype=np.int64)
    colors[list(order)] = np.arange(n) % k
    steps = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40))
    return g, k, colors, steps


@settings(max_examples=150, deadline=None)
@given(partitions_and_moves())
def test_random_moves_keep_caches_exact(case):
    g, k, colors, steps = case
    s = Partition.from_assignment(g, k, colors)
    q = g.n // k
    for a, b in steps:
        before = s.objective
        if s.r and s.class_size[s.color_of[a]] == q + 1 and s.class_size[b % k] == q:
            predicted = s.delta_1move(a, b % k)
            s.apply_1move(a, b % k)
        elif s.color_of[a] != s.color_of[b]:
            predicted = s.delta_2exchange(a, b)
            s.apply_2exchange(a, b)
        else:
            continue
        assert s.objective - before == predicted
        assert s.objective == objective_from_scratch(g, s.color_of)
        assert s.class_size.max() - s.class_size.min() <= 1
        assert len(s.equity_sets()[0]) == g.n % k
        assert (s.objective == 0) == (not s.conflicting_set()) == verify_eqcol(g, s)
    s.check()


@settings(max_examples=100, deadline=None)
@given(partitions_and_moves())
def test_double_swap_is_identity(case):
    g, k, colors, steps = case
    s = Partition.from_assignment(g, k, colors)
    for a, b in steps:
        if s.color_of[a] != s.color_of[b]:
            snapshot = s.copy()
            s.apply_2exchange(a, b)
            s.apply_2exchange(a, b)
            assert np.array_equal(s.color_of, snapshot.color_of)
            assert np.array_equal(s.gamma, snapshot.gamma)
            assert s.objective == snapshot.objective
