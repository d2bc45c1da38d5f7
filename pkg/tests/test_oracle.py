from __future__ import annotations

import pytest

from core.errors import BudgetExceeded, K2Component
from graphs.generators import complete_graph, cycle_graph, path_graph
from graphs.graph import Graph
from verification.oracle import brute_force_min_k, enumeration_bound, sample_min_k
from verification.verifier import verify_weighting


@pytest.mark.parametrize("n, k", [(3, 3), (4, 2), (5, 3), (6, 3), (7, 3), (8, 2)])
def test_cycles(n, k):
    g = cycle_graph(n)
    result = brute_force_min_k(g)
    assert result.k == k
    assert verify_weighting(g, result.witness).ok
    assert set(result.witness.values()) <= set(range(1, k + 1))


def test_path_needs_one_weight():
    assert brute_force_min_k(path_graph(3)).k == 1


def test_edgeless_graph():
    result = brute_force_min_k(Graph(4, frozenset()))
    assert result.k == 1 and result.witness == {}


def test_k2_has_no_weighting():
    with pytest.raises(K2Component):
        brute_force_min_k(Graph.from_edges(2, [(0, 1)]))


def test_not_found_below_k_max():
    result = brute_force_min_k(cycle_graph(3), k_max=2)
    assert not result.found and result.k_max == 2


def test_budget_is_checked_before_each_k():
    with pytest.raises(BudgetExceeded) as excinfo:
        brute_force_min_k(complete_graph(5), budget=10)
    assert (excinfo.value.k, excinfo.value.bound) == (2, enumeration_bound(2, 10))
    assert excinfo.value.exit_code == 4


def test_witness_is_lexicographically_first():
    g = cycle_graph(4)
    result = brute_force_min_k(g)
    edges = g.sorted_edges()
    assert [result.witness[e] for e in edges] == [1, 1, 2, 2]


def test_parallel_search_agrees_with_serial():
    g = cycle_graph(6)
    assert brute_force_min_k(g, workers=2) == brute_force_min_k(g)


def test_sampling_gives_an_upper_bound():
    g = cycle_graph(4)
    bound = sample_min_k(g, samples=2000, seed=0)
    assert bound.k_upper == 2
    assert bound.found and not bound.exact and bound.k == 2
    assert bound.hits[1] == 0
    assert verify_weighting(g, bound.witness).ok
