from __future__ import annotations

import pytest

from core.errors import InvalidGeneratorParameters
from graphs.generators import generate, regular_graph, to_networkx


def test_cycle_family():
    g = generate("cycle", ["5"])
    assert g.n == 5 and g.m == 5
    assert all(g.degree(v) == 2 for v in g.vertices())


def test_complete_family():
    assert generate("complete", ["4"]).m == 6


def test_star_center_is_vertex_zero():
    g = generate("star", ["5"])
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_grid_family():
    g = generate("grid", ["3", "4"])
    assert (g.n, g.m) == (12, 17)


def test_gnp_is_reproducible():
    first = generate("gnp", ["12", "0.5"], seed=7)
    second = generate("gnp", ["12", "0.5"], seed=7)
    assert first == second
    assert first.n == 12


def test_regular_graph_degrees():
    g = regular_graph(10, 3, seed=1)
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert to_networkx(g).number_of_edges() == 15


@pytest.mark.parametrize(
    "family, params",
    [
        ("hypercube", ["3"]),
        ("cycle", ["2"]),
        ("cycle", ["five"]),
        ("grid", ["3"]),
        ("gnp", ["5", "1.5"]),
        ("regular", ["5", "3"]),
    ],
    ids=["unknown", "too-small", "not-int", "arity", "probability", "odd-degree-sum"],
)
def test_invalid_parameters(family, params):
    with pytest.raises(InvalidGeneratorParameters):
        generate(family, params)
