from __future__ import annotations

import pytest

from core.experiments import (
    enumerate_labeled_graphs,
    format_report,
    has_k2_component,
    run_batch,
    run_sweep,
)
from graphs.graph import Cut, Graph
from verification.verifier import Verdict
from weighting.algorithm import WeightingOptions


def sabotaged(g, weights):
    return Verdict(False, [(0, 0)])


def test_labeled_enumeration_counts():
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64
    masks = [mask for mask, _ in enumerate_labeled_graphs(3, 2, 5)]
    assert masks == [2, 3, 4]


def test_k2_detection():
    assert has_k2_component(Graph.from_edges(3, [(0, 1)]))
    assert not has_k2_component(Graph.from_edges(3, [(0, 1), (1, 2)]))


def test_sweep_up_to_five_vertices_passes():
    report = run_sweep(5)
    total = report.total
    assert total.graphs == 1 + 2 + 8 + 64 + 1024
    assert total.weighted + total.skipped_k2 == total.graphs
    assert report.failures == 0
    assert set(total.weight_values) <= {1, 2, 3, 4}
    assert "runtime" in format_report(report)


def test_sabotaged_verifier_is_noticed():
    report = run_sweep(3, verifier=sabotaged)
    assert report.total.weighted == 7
    assert report.total.skipped_k2 == 4
    assert report.failures == 7


def test_batch_counts_every_sample():
    report = run_batch(4, [6, 7], [0.3, 0.6], seed=11, check_two=True)
    assert len(report.tallies) == 4
    total = report.total
    assert total.graphs == 16
    assert report.failures == 0
    assert total.two_checked == total.weighted
    assert 0 <= total.two_weightable <= total.two_checked


def test_batch_is_reproducible():
    first = run_batch(3, [8], [0.5], seed=2)
    second = run_batch(3, [8], [0.5], seed=2)
    assert first.tallies["n=8 p=0.5"].weight_values == second.tallies["n=8 p=0.5"].weight_values


def test_batch_on_larger_graphs_passes():
    report = run_batch(20, [10, 16], [0.2, 0.5, 0.8], seed=0)
    total = report.total
    assert total.graphs == 120
    assert total.weighted + total.skipped_k2 == total.graphs
    assert report.failures == 0


def test_cut_source_overrides_need_a_single_worker():
    options = WeightingOptions(cut_source=lambda h: Cut.from_side(h, []))
    with pytest.raises(ValueError, match="workers=1"):
        run_sweep(3, workers=2, options=options)
    with pytest.raises(ValueError, match="workers=1"):
        run_batch(2, [6], [0.5], workers=2, options=options)
    assert run_sweep(3, options=options).failures == 0
