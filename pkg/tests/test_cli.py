from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from graphs.generators import cycle_graph
from graphs.io import parse_graph
from scripts.cli import cli
from verification.verifier import verify_weighting


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_weight_prints_a_certificate(runner, write_graph, c5):
    result = runner.invoke(cli, ["weight", write_graph(c5)])
    assert result.exit_code == 0
    assert "# verdict: ok" in result.stdout


def test_weight_refuses_k2(runner, write_graph):
    result = runner.invoke(cli, ["weight", write_graph("2 1\n0 1\n")])
    assert result.exit_code == 2
    assert "K2 component {0,1}" in result.output


def test_weight_reports_parse_errors(runner, write_graph):
    result = runner.invoke(cli, ["weight", write_graph("3 2\n0 1\n0 1\n")])
    assert result.exit_code == 3
    assert "line 3" in result.output


def test_missing_file_is_an_input_error(runner, tmp_path):
    result = runner.invoke(cli, ["weight", str(tmp_path / "absent.txt")])
    assert result.exit_code == 3


def test_undecodable_graph_file_is_an_input_error(runner, tmp_path):
    path = tmp_path / "g.txt"
    path.write_bytes(b"# \xff\xfe\n")
    result = runner.invoke(cli, ["weight", str(path)])
    assert result.exit_code == 3
    assert "not UTF-8" in result.output


def test_exact_cut_trace(runner, write_graph, c5):
    result = runner.invoke(cli, ["weight", "--exact-cut", "--trace", write_graph(c5)])
    assert result.exit_code == 0
    assert "cut: exact_max_cut:3" in result.stdout
    assert "[star]" in result.stdout


def test_structured_certificate(runner, write_graph, c5):
    result = runner.invoke(cli, ["weight", "--format", "structured", "--seed", "3", write_graph(c5)])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["seed"] == 3
    assert document["verdict"]["ok"] is True
    assert len(document["weights"]) == 5


def test_certificate_round_trips_through_verify(runner, write_graph, c5):
    graph_path = write_graph(c5)
    certificate = runner.invoke(cli, ["weight", graph_path]).stdout
    weights_path = write_graph(certificate, name="weights.txt")
    result = runner.invoke(cli, ["verify", graph_path, weights_path])
    assert result.exit_code == 0
    assert result.stdout.strip() == "ok"


def test_verify_lists_conflicts(runner, write_graph):
    graph_path = write_graph("3 3\n0 1\n0 2\n1 2\n")
    weights_path = write_graph("0 1 1\n0 2 1\n1 2 1\n", name="weights.txt")
    result = runner.invoke(cli, ["verify", graph_path, weights_path])
    assert result.exit_code == 1
    assert result.stdout.count("conflict") == 3


def test_verify_rejects_missing_edges(runner, write_graph):
    graph_path = write_graph("3 3\n0 1\n0 2\n1 2\n")
    weights_path = write_graph("0 1 1\n0 2 2\n", name="weights.txt")
    result = runner.invoke(cli, ["verify", graph_path, weights_path])
    assert result.exit_code == 3
    assert "missing weights for {1,2}" in result.output


@pytest.mark.parametrize("n, k", [(4, "2"), (6, "3")])
def test_mink(runner, write_graph, n, k):
    result = runner.invoke(cli, ["mink", write_graph(cycle_graph(n))])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == k
    assert len(lines) == 1 + n


def test_mink_on_k2(runner, write_graph):
    result = runner.invoke(cli, ["mink", write_graph("2 1\n0 1\n")])
    assert result.exit_code == 2
    assert result.stdout.strip() == "none"


def test_mink_budget(runner, write_graph):
    result = runner.invoke(cli, ["mink", "--budget", "10", write_graph(cycle_graph(5))])
    assert result.exit_code == 4


def test_mink_samples_past_the_budget(runner, write_graph, c5):
    result = runner.invoke(cli, ["mink", "--budget", "10", "--sample", "5000", write_graph(c5)])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "<= 3"
    witness = {}
    for line in lines[1:]:
        u, v, w = map(int, line.split())
        witness[(u, v)] = w
    assert verify_weighting(c5, witness).ok


def test_gen_cycle(runner):
    result = runner.invoke(cli, ["gen", "cycle", "5"])
    assert result.exit_code == 0
    assert parse_graph(result.stdout) == cycle_graph(5)


def test_gen_complete_dimacs(runner):
    result = runner.invoke(cli, ["gen", "complete", "4", "--format", "dimacs"])
    assert result.exit_code == 0
    assert "p edge 4 6" in result.stdout


def test_gen_is_reproducible(runner, tmp_path):
    out = tmp_path / "g.txt"
    first = runner.invoke(cli, ["gen", "gnp", "12", "0.5", "--seed", "7"]).stdout
    result = runner.invoke(cli, ["gen", "gnp", "12", "0.5", "--seed", "7", "-o", str(out)])
    assert result.exit_code == 0
    assert out.read_text() == first


def test_gen_rejects_bad_parameters(runner):
    result = runner.invoke(cli, ["gen", "cycle", "two"])
    assert result.exit_code == 3


def test_sweep(runner):
    result = runner.invoke(cli, ["sweep", "4"])
    assert result.exit_code == 0
    assert "total" in result.stdout


def test_batch(runner):
    result = runner.invoke(cli, ["batch", "--samples", "2", "-n", "6", "-p", "0.5", "--seed", "1"])
    assert result.exit_code == 0
    assert "n=6 p=0.5" in result.stdout
