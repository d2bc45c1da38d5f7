from __future__ import annotations

import pytest

from core.errors import GraphParseError
from graphs.generators import grid_graph
from graphs.graph import Graph
from graphs.io import detect_format, format_graph, parse_graph, parse_weights, read_graph, read_weights
from weighting.algorithm import weight_graph
from weighting.certificate import render_structured, render_text


def test_parse_edgelist_with_comments():
    g = parse_graph("# a path\n3 2\n0 1\n\n# middle\n2 1\n")
    assert g == Graph.from_edges(3, [(0, 1), (1, 2)])


def test_parse_dimacs_is_one_based():
    g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g.sorted_edges() == [(0, 1), (0, 2), (1, 2)]


def test_detect_format():
    assert detect_format("# x\n3 0\n") == "edgelist"
    assert detect_format("c x\np edge 1 0\n") == "dimacs"


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 2\n0 1\n", 1),
        ("p edge 2 1\ne 1 1\n", 2),
        ("e 1 2\np edge 2 1\n", 1),
    ],
    ids=["duplicate", "range", "self-loop", "token", "count", "dimacs-loop", "dimacs-order"],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line == line
    assert excinfo.value.exit_code == 3


def test_missing_header():
    with pytest.raises(GraphParseError):
        parse_graph("# only comments\n")


@pytest.mark.parametrize("fmt", ["edgelist", "dimacs"])
def test_written_graphs_read_back(fmt, tmp_path):
    g = grid_graph(2, 3)
    path = tmp_path / "g.txt"
    path.write_text(format_graph(g, fmt, comment="grid 2 3"))
    assert read_graph(path) == g


def test_undecodable_files_are_parse_errors(tmp_path):
    path = tmp_path / "g.txt"
    path.write_bytes(b"3 2\n0 1\n# \xff\xfe\n")
    with pytest.raises(GraphParseError) as excinfo:
        read_graph(path)
    assert excinfo.value.line == 3
    with pytest.raises(GraphParseError):
        read_weights(path)


def test_weight_file_lines():
    weights = parse_weights("# header\n2 0 3\n0 1 1\n")
    assert weights == {(0, 2): 3, (0, 1): 1}


def test_weight_file_rejects_repeats():
    with pytest.raises(GraphParseError) as excinfo:
        parse_weights("0 1 1\n1 0 2\n")
    assert excinfo.value.line == 2


def test_certificates_double_as_weight_files(c5):
    cert = weight_graph(c5)
    assert parse_weights(render_text(cert)) == cert.weighting()
    assert parse_weights(render_structured(cert)) == cert.weighting()
