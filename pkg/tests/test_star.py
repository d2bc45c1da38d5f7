from __future__ import annotations

from itertools import combinations, product

import pytest

from coloring.star import StarCase, StarInstance, check_h_properties, compute_h, select_case
from core.errors import PreconditionViolated
from graphs.graph import Graph


def star(n: int, extra=()) -> Graph:
    """Vertex 0 joined to 1..n-1, plus `extra` edges among the leaves."""
    return Graph.from_edges(n, [(0, v) for v in range(1, n)] + list(extra))


def instance(n, g, extra=()) -> StarInstance:
    return StarInstance(star(n, extra), 0, dict(enumerate(g)))


@pytest.mark.parametrize(
    "inst, case, h, f",
    [
        (instance(3, [0, 1, 2]), StarCase.ALL_DISTINCT, {}, {0: 0, 1: 1, 2: 2}),
        (instance(3, [0, 0, 1]), StarCase.SINGLE_V1, {(0, 2): 2}, {0: 2, 1: 0, 2: 3}),
        (instance(3, [0, 0, 4]), StarCase.HJ_SMALL_I, {(0, 2): 2}, {0: 2, 1: 0, 2: 6}),
        (
            instance(4, [0, 0, 2, 6]),
            StarCase.HJ_LARGE_I,
            {(0, 1): 2, (0, 2): 2, (0, 3): 2},
            {0: 6, 1: 2, 2: 4, 3: 8},
        ),
        (instance(3, [0, 0, 2]), StarCase.X_EQ_M_EVEN, {(0, 2): 2}, {0: 2, 1: 0, 2: 4}),
        (
            instance(4, [0, 0, 2, 4]),
            StarCase.X_EQ_M_ODD_NOEDGE,
            {(0, 2): 2},
            {0: 2, 1: 0, 2: 4, 3: 4},
        ),
        (
            instance(4, [0, 0, 2, 4], extra=[(2, 3)]),
            StarCase.X_EQ_M_ODD_TRIANGLE,
            {(0, 2): 1, (0, 3): 1, (2, 3): 1},
            {0: 2, 1: 0, 2: 4, 3: 6},
        ),
    ],
    ids=lambda value: value.value if isinstance(value, StarCase) else None,
)
def test_cases(inst, case, h, f):
    assert select_case(inst) is case
    hf = compute_h(inst)
    assert hf.case is case
    assert {e: value for e, value in hf.h.items() if value} == h
    assert hf.f == f
    assert check_h_properties(inst, hf) == []


def test_single_v1_ties_go_to_the_smallest_id():
    hf = compute_h(instance(4, [0, 0, 3, 3]))
    assert hf.case is StarCase.SINGLE_V1
    assert hf.h == {(0, 2): 2}


@pytest.mark.parametrize(
    "graph, g",
    [
        (Graph.from_edges(2, [(0, 1)]), {0: 0, 1: 0}),
        (Graph.from_edges(3, [(0, 1), (1, 2)]), {0: 0, 1: 1, 2: 2}),
        (star(3, [(1, 2)]), {0: 0, 1: 1, 2: 1}),
    ],
    ids=["too-small", "center-not-universal", "leaf-conflict"],
)
def test_preconditions(graph, g):
    with pytest.raises(PreconditionViolated):
        compute_h(StarInstance(graph, 0, g))


def test_property_checker_reports_violations():
    inst = instance(3, [0, 0, 1])
    hf = compute_h(inst)
    hf.h = {(0, 1): 1}
    assert any(v.startswith("(iv)") for v in check_h_properties(inst, hf))


def test_every_small_instance_is_recolored():
    seen = set()
    for n in (3, 4, 5):
        leaves = range(1, n)
        leaf_pairs = list(combinations(leaves, 2))
        values = range(6) if n < 5 else range(5)
        for mask in range(1 << len(leaf_pairs)):
            extra = [pair for bit, pair in enumerate(leaf_pairs) if (mask >> bit) & 1]
            graph = star(n, extra)
            for g0 in (0, 1):
                for rest in product(values, repeat=n - 1):
                    g = (g0, *rest)
                    if any(g[u] == g[v] for u, v in extra):
                        continue
                    inst = StarInstance(graph, 0, dict(enumerate(g)))
                    hf = compute_h(inst)
                    assert check_h_properties(inst, hf) == [], (n, extra, g)
                    seen.add(hf.case)
    assert seen == set(StarCase)
