from __future__ import annotations

import pytest

from core.errors import DomainMismatch
from graphs.generators import complete_graph, cycle_graph
from graphs.graph import Cut
from verification.verifier import parity_audit, verify_weighting


def test_all_ones_on_a_triangle_conflicts_everywhere():
    verdict = verify_weighting(complete_graph(3), {(0, 1): 1, (0, 2): 1, (1, 2): 1})
    assert not verdict.ok
    assert verdict.conflicts == [(0, 1), (0, 2), (1, 2)]
    assert verdict.degrees == [2, 2, 2]


def test_proper_weighting_of_a_four_cycle():
    weights = {(0, 1): 1, (1, 2): 1, (2, 3): 2, (0, 3): 2}
    verdict = verify_weighting(cycle_graph(4), weights)
    assert verdict.ok and verdict.conflicts == []
    assert verdict.degrees == [3, 2, 3, 4]


def test_missing_and_extra_edges():
    with pytest.raises(DomainMismatch) as excinfo:
        verify_weighting(complete_graph(3), {(0, 1): 1, (0, 2): 1, (0, 3): 1})
    assert excinfo.value.missing == [(1, 2)]
    assert excinfo.value.extra == [(0, 3)]
    assert excinfo.value.exit_code == 3


def test_parity_audit_ignores_v0():
    g = cycle_graph(4)
    cut = Cut.from_side(g, [1, 3], ground=[1, 2, 3])
    # degrees 3, 4, 5, 4: S = {1, 3} even, T = {2} odd; vertex 0 is exempt
    weights = {(0, 1): 1, (1, 2): 3, (2, 3): 2, (0, 3): 2}
    assert parity_audit(g, weights, cut, 0)
    assert not parity_audit(g, {**weights, (2, 3): 3}, cut, 0)
