from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from core.errors import NotImproving, TooLarge
from cuts.search import (
    CutSearchState,
    cut_graph_components,
    exact_max_cut,
    improve_cut_from_mincut,
    is_one_flip_maximal,
    local_search_cut,
    repair_cut_connectivity,
)
from flows.network import OrientedDemand, build_network, max_flow
from graphs.generators import complete_graph, cycle_graph, path_graph
from graphs.graph import Cut, Graph

from .strategies import small_graphs


def brute_force_max_cut(g: Graph) -> int:
    best = 0
    for size in range(g.n + 1):
        for side in combinations(range(g.n), size):
            best = max(best, Cut.from_side(g, side).size)
    return best


@pytest.mark.parametrize("seed", [0, 1, 17])
def test_local_search_reaches_one_flip_maximum(seed):
    h = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (1, 5)])
    cut = local_search_cut(h, seed)
    assert is_one_flip_maximal(h, cut)
    assert local_search_cut(h, seed) == cut


def test_local_search_seed_zero_starts_from_even_ids():
    h = path_graph(5)
    assert local_search_cut(h).S == frozenset({0, 2, 4})


def test_exact_max_cut_is_lexicographically_smallest():
    assert exact_max_cut(path_graph(4)).S == frozenset({0, 2})
    assert exact_max_cut(complete_graph(3)).S == frozenset({0})


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7))
def test_exact_max_cut_matches_brute_force(g):
    assert exact_max_cut(g).size == brute_force_max_cut(g)


def test_exact_max_cut_refuses_large_graphs():
    with pytest.raises(TooLarge) as excinfo:
        exact_max_cut(cycle_graph(6), threshold=5)
    assert excinfo.value.exit_code == 4


def test_repair_flips_components_until_connected():
    h = path_graph(4)
    cut = Cut.from_side(h, h.vertices())
    state = CutSearchState.start("given", cut)
    repaired = repair_cut_connectivity(h, cut, state)
    assert len(cut_graph_components(h, repaired)) == 1
    assert repaired.size == 3
    assert state.history == [("given", 0), ("repair", 1), ("repair", 2), ("repair", 3)]
    assert state.improvements == 3


def test_record_refuses_a_cut_that_does_not_grow():
    h = cycle_graph(4)
    state = CutSearchState.start("local_search", Cut.from_side(h, [0, 2]))
    with pytest.raises(NotImproving):
        state.record("mincut", Cut.from_side(h, [0]))


def test_short_flow_yields_a_larger_cut():
    # cut graph is the path 0-2-1-3; both demands must cross its middle edge
    h = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    cut = Cut.from_side(h, [0, 1])
    demand = OrientedDemand.from_pairs([(0, 1), (2, 3)])
    net = build_network(h, cut, demand)
    flow = max_flow(net)
    assert flow.value == 1
    sides = flow.original_sides(net)
    assert sides == (frozenset({0, 2}), frozenset({1, 3}))

    improved = improve_cut_from_mincut(h, cut, demand.pairs(), sides)
    assert improved.S == frozenset({0, 3})
    assert improved.size == 4 > cut.size


def test_mincut_split_that_cannot_improve_is_rejected():
    h = path_graph(3)
    cut = Cut.from_side(h, [0, 2])
    with pytest.raises(NotImproving):
        improve_cut_from_mincut(h, cut, [], (frozenset(h.vertices()), frozenset()))
