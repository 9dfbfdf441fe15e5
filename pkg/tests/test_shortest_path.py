from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import chain, diamond, graphs, path_weight, simple_paths, walk_distances
from wtss.errors import NegativeCycleError, UnreachableError
from wtss.graph import Graph
from wtss.shortest_path import distance, reverse_sssp, shortest_path_subgraph, sssp


def test_chain_distances():
    assert sssp(chain(1, 2), 0) == (0, 1, 3)
    assert sssp(chain(-1, 3), 0)[2] == 2
    assert reverse_sssp(chain(1, 2), 2) == (3, 2, 0)


def test_diamond_distances():
    g = diamond((1, 2, 2, 1))
    assert sssp(g, 0)[3] == 3
    assert reverse_sssp(g, 3) == (3, 2, 1, 0)


def test_unreachable_is_none():
    g = Graph.from_edges(3, [(0, 1, 4)], 0)
    assert sssp(g, 0)[2] is None
    assert reverse_sssp(g, 1)[2] is None
    assert distance(g, 0, 2) is None


def test_negative_cycle_reachable_from_query_source():
    # the cycle 1 <-> 2 is not reachable from the graph source 0
    g = Graph.from_edges(3, [(1, 2, -2), (2, 1, 1), (2, 0, 1)], 0)
    assert sssp(g, 0) == (0, None, None)
    with pytest.raises(NegativeCycleError):
        sssp(g, 1)
    with pytest.raises(NegativeCycleError):
        reverse_sssp(g, 0)


def test_rational_distances_are_exact():
    g = Graph.from_edges(3, [(0, 1, Fraction(1, 3)), (1, 2, Fraction(1, 6)), (0, 2, 1)], 0)
    assert sssp(g, 0) == (0, Fraction(1, 3), Fraction(1, 2))


def test_shortest_path_subgraph_examples():
    assert shortest_path_subgraph(diamond((1, 2, 2, 1)), 0, 3).included == frozenset(range(4))
    assert shortest_path_subgraph(diamond((1, 2, 3, 1)), 0, 3).included == frozenset([1, 3])
    assert shortest_path_subgraph(chain(1, 2, 3), 0, 3).included == frozenset([0, 1, 2])
    with pytest.raises(UnreachableError):
        shortest_path_subgraph(chain(1), 1, 0)


def test_negative_cycle_off_every_st_path_is_ignored():
    # 3 <-> 4 is negative and reaches t, but s never reaches it
    g = Graph.from_edges(5, [(0, 1, 1), (1, 2, 1), (3, 4, -1), (4, 3, -1), (4, 1, 0)], 0)
    with pytest.raises(NegativeCycleError):
        reverse_sssp(g, 2)
    assert shortest_path_subgraph(g, 0, 2).included == frozenset([0, 1])


@settings(max_examples=120, deadline=None)
@given(graphs(n_max=7, m_max=12, rational=True))
def test_sssp_matches_walk_oracle(g):
    assert list(sssp(g, 0)) == walk_distances(g, 0)


@settings(max_examples=120, deadline=None)
@given(graphs(n_max=7, m_max=12), st.data())
def test_reverse_sssp_matches_forward(g, data):
    t = data.draw(st.integers(0, g.n - 1))
    back = reverse_sssp(g, t)
    for v in range(g.n):
        if back[v] is not None or sssp(g, v)[t] is not None:
            # only meaningful where no negative cycle is reachable from v
            assert back[v] == sssp(g, v)[t]


@settings(max_examples=120, deadline=None)
@given(graphs(n_max=7, m_max=11, lo=1, hi=4), st.data())
def test_shortest_path_subgraph_is_union_of_min_paths(g, data):
    # positive weights: every minimum walk is a simple path
    t = data.draw(st.integers(1, g.n - 1))
    paths = simple_paths(g, 0, t)
    if not paths:
        with pytest.raises(UnreachableError):
            shortest_path_subgraph(g, 0, t)
        return
    best = min(path_weight(g, p) for p in paths)
    union = {e for p in paths if path_weight(g, p) == best for e in p}
    assert shortest_path_subgraph(g, 0, t).included == frozenset(union)


@settings(max_examples=120, deadline=None)
@given(graphs(n_max=7, m_max=12), st.data())
def test_paths_inside_short_subgraph_are_shortest(g, data):
    t = data.draw(st.integers(1, g.n - 1))
    if distance(g, 0, t) is None:
        return
    short = shortest_path_subgraph(g, 0, t)
    touched = {e.tail for e in short.edges()} | {e.head for e in short.edges()}
    for u in touched:
        du = sssp(g, u)
        for v in touched:
            for p in simple_paths(g, u, v, short.included):
                if p:
                    assert path_weight(g, p) == du[v]
