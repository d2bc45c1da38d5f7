from __future__ import annotations

import pytest

from graphs.generators import cycle_graph, path_graph
from graphs.graph import Graph
from graphs.io import format_graph


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def write_graph(tmp_path):
    """Write a graph (or raw text) to a file and return its path as a string."""

    def _write(graph_or_text, name: str = "graph.txt") -> str:
        text = graph_or_text if isinstance(graph_or_text, str) else format_graph(graph_or_text)
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write
