import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import diamond, random_graph
from wtss.errors import BudgetError, WitnessBudgetError
from wtss.graph import Graph
from wtss.oracle import (IncrementFunction, apply_increment, dump_counterexample,
                         enumerate_increments, verify_edge_necessity, verify_ftrs_reduction,
                         verify_wtss, verify_wtss_t)


def test_enumeration_order_small():
    got = [inc.dense(2) for inc in enumerate_increments(2, 2)]
    assert got == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert len(list(enumerate_increments(3, 1))) == 4
    assert len(list(enumerate_increments(4, 3))) == 35


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.integers(0, 4))
def test_enumeration_complete_and_unique(m, k):
    incs = [inc.dense(m) for inc in enumerate_increments(m, k)]
    assert len(incs) == math.comb(m + k, k)
    assert len(set(incs)) == len(incs)
    assert all(sum(x) <= k and min(x, default=0) >= 0 for x in incs)


def test_negative_budget():
    with pytest.raises(BudgetError):
        list(enumerate_increments(3, -1))


def test_apply_increment():
    g = Graph.from_edges(3, [(0, 1, 5), (1, 2, 1)], 0)
    assert apply_increment(g, IncrementFunction({0: 2})).edges[0].weight == 7
    assert apply_increment(g, {1: Fraction(1, 3)}).edges[1].weight == Fraction(4, 3)
    assert apply_increment(g, IncrementFunction()) == g
    assert g.edges[0].weight == 5


def test_verify_examples():
    g = diamond()
    assert verify_wtss(g, g.full(), 0, 2) is None
    tree = g.subgraph([0, 1, 2])
    bad = verify_wtss(g, tree, 0, 1)
    assert bad is not None
    assert bad.target == 3 and bad.dist_in_g == 2 and bad.dist_in_h == 3
    assert bad.increment.amounts == {0: 1}
    one_path = g.subgraph([0, 2])
    bad = verify_wtss_t(g, one_path, 0, 3, 1)
    assert bad.increment.amounts == {0: 1}
    assert dump_counterexample(bad) == "increment 0=1\ntarget 3\ndist_g 2\ndist_h 3\n"
    assert verify_wtss_t(g, one_path, 0, 1, 3) is None


def test_counterexample_unreachable_prints_inf():
    g = Graph.from_edges(2, [(0, 1, 1)], 0)
    bad = verify_wtss(g, g.empty(), 0, 0)
    assert bad.dist_in_h is None
    assert "dist_h inf" in str(bad)


def test_counterexamples_only_lose_distance():
    rng = random.Random(21)
    for _ in range(60):
        g = random_graph(rng, n_max=5, m_max=7)
        drop = set(rng.sample(range(g.m), min(g.m, 2)))
        bad = verify_wtss(g, g.full().without(drop), 0, 1)
        if bad is not None:
            assert bad.dist_in_h is None or bad.dist_in_h > bad.dist_in_g


def test_edge_necessity_examples():
    g = diamond()
    assert all(v.necessary for v in verify_edge_necessity(g, 0, 1))
    # the heavy parallel edge never matters with budget 1
    g = Graph.from_edges(2, [(0, 1, 1), (0, 1, 5)], 0)
    verdicts = verify_edge_necessity(g, 0, 1)
    assert [v.label for v in verdicts] == ["NECESSARY", "NOT-PROVEN"]


def test_witness_budget_enforced():
    g = diamond()
    with pytest.raises(WitnessBudgetError):
        verify_edge_necessity(g, 0, 1, [IncrementFunction({0: 1, 1: 1})])
    with pytest.raises(WitnessBudgetError):
        verify_edge_necessity(g, 0, 1, [IncrementFunction({0: -2})])
    with pytest.raises(BudgetError):
        verify_edge_necessity(g, 0, Fraction(1, 2))


def test_ftrs_reduction_examples():
    # two edge-disjoint routes to 3: a tree loses vertex 3 after one deletion
    g = Graph.from_edges(4, [(0, 1, 0), (0, 2, 0), (1, 3, 0), (2, 3, 0)], 0)
    assert verify_ftrs_reduction(g, g.full(), 0, 2) is None
    dead, target = verify_ftrs_reduction(g, g.subgraph([0, 1, 2]), 0, 1)
    assert dead == frozenset([0]) and target == 3
    assert verify_ftrs_reduction(g, g.subgraph([0, 1, 2]), 0, 0) is None
    with pytest.raises(ValueError):
        verify_ftrs_reduction(diamond(), diamond().full(), 0, 1)


def test_subgraph_of_other_graph_rejected():
    with pytest.raises(ValueError):
        verify_wtss(diamond(), Graph.from_edges(4, [], 0).full(), 0, 1)
