#!/usr/bin/env python3
"""
Command-line surface of the edge-weighting engine.

Usage:
    python scripts/cli.py weight graph.txt [--seed N] [--exact-cut] [--trace] [--format text|structured]
    python scripts/cli.py verify graph.txt weights.txt
    python scripts/cli.py mink graph.txt [--max-k K] [--budget B] [--sample N]
    python scripts/cli.py gen cycle 5
    python scripts/cli.py sweep 5 [--workers W]
    python scripts/cli.py batch --samples 50 -n 10 -n 20 -p 0.3 -p 0.5
"""

from __future__ import annotations

import logging
import sys
from functools import wraps
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import click
from dotenv import load_dotenv

from configs.settings import LOG_LEVEL
from core.errors import BudgetExceeded, K2Component, WeightingError
from core.experiments import format_report
from core.system import WeightingSystem
from graphs.io import format_graph, read_graph, read_weights
from weighting.certificate import render_structured, render_text

logger = logging.getLogger("edge_weighting.cli")

EXIT_CONFLICTS = 1
EXIT_INPUT = 3


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="[%(levelname)s] %(message)s", force=True)


def reports_errors(command):
    """Turn engine errors into a one-line diagnostic and the matching exit code."""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except WeightingError as exc:
            click.echo(f"[ERROR] {exc}", err=True)
            sys.exit(exc.exit_code)
        except OSError as exc:
            click.echo(f"[ERROR] {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging.")
@click.pass_context
def cli(ctx: click.Context, verbose: int) -> None:
    """Vertex-coloring edge-weightings with weights {1,2,3,4}."""
    load_dotenv()
    _configure_logging(verbose)
    ctx.obj = WeightingSystem.from_env()


@cli.command()
@click.argument("graph_path")
@click.option("--seed", type=int, default=None, help="Seed for the initial local-search cut.")
@click.option("--exact-cut", is_flag=True, help="Start from an exact maximum cut of H.")
@click.option("--exact-cut-threshold", type=int, default=None, help="Largest |V(H)| for --exact-cut.")
@click.option("--trace", is_flag=True, help="Add per-stage detail to the certificate.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--graph-format", type=click.Choice(["auto", "edgelist", "dimacs"]), default="auto")
@click.pass_obj
@reports_errors
def weight(system: WeightingSystem, graph_path, seed, exact_cut, exact_cut_threshold, trace, fmt, graph_format):
    """Weight GRAPH_PATH and print its certificate."""
    g = read_graph(graph_path, graph_format)
    cert = system.weight(
        g, seed=seed, exact_cut=exact_cut, exact_cut_threshold=exact_cut_threshold, trace=trace
    )
    click.echo(render_structured(cert) if fmt == "structured" else render_text(cert), nl=False)
    if not cert.verdict.ok:
        click.echo(f"[ERROR] verifier rejected the weighting: {cert.verdict.conflicts}", err=True)
        sys.exit(5)


@cli.command()
@click.argument("graph_path")
@click.argument("weights_path")
@click.option("--graph-format", type=click.Choice(["auto", "edgelist", "dimacs"]), default="auto")
@click.pass_obj
@reports_errors
def verify(system: WeightingSystem, graph_path, weights_path, graph_format):
    """Check that WEIGHTS_PATH is a vertex-coloring weighting of GRAPH_PATH."""
    g = read_graph(graph_path, graph_format)
    verdict = system.verify(g, read_weights(weights_path))
    if verdict.ok:
        click.echo("ok")
        return
    for u, v in verdict.conflicts:
        click.echo(f"conflict {u} {v} (weighted degree {verdict.degrees[u]})")
    sys.exit(EXIT_CONFLICTS)


@cli.command()
@click.argument("graph_path")
@click.option("--max-k", type=int, default=4, show_default=True)
@click.option("--budget", type=int, default=None, help="Largest k^|E| the enumeration may visit.")
@click.option(
    "--sample",
    "samples",
    type=click.IntRange(min=1),
    default=None,
    help="Past the budget, report an upper bound from this many random weightings per k.",
)
@click.option("--graph-format", type=click.Choice(["auto", "edgelist", "dimacs"]), default="auto")
@click.pass_obj
@reports_errors
def mink(system: WeightingSystem, graph_path, max_k, budget, samples, graph_format):
    """Smallest k such that weights {1..k} suffice, with a witness.

    A sampled result is printed as "<= k": an upper bound, not a minimum.
    """
    g = read_graph(graph_path, graph_format)
    try:
        result = system.min_k(g, max_k, budget)
    except K2Component as exc:
        click.echo("none")
        click.echo(f"[ERROR] {exc}", err=True)
        sys.exit(exc.exit_code)
    except BudgetExceeded as exc:
        if samples is None:
            raise
        logger.warning("%s; sampling %d weightings per k", exc, samples)
        result = system.sample(g, max_k, samples)
    if not result.found:
        click.echo("none")
        sys.exit(EXIT_CONFLICTS)
    click.echo(result.k if result.exact else f"<= {result.k}")
    for (u, v), w in sorted(result.witness.items()):
        click.echo(f"{u} {v} {w}")


@cli.command()
@click.argument("family")
@click.argument("params", nargs=-1)
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "dimacs"]), default="edgelist")
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_obj
@reports_errors
def gen(system: WeightingSystem, family, params, seed, fmt, output):
    """Generate a graph: path N, cycle N, complete N, star N, grid R C, gnp N P, regular N D."""
    g = system.generate(family, list(params), seed)
    comment = " ".join([family, *params] + ([f"seed={seed}"] if seed is not None else []))
    text = format_graph(g, fmt, comment)
    if output:
        Path(output).write_text(text)
        logger.info("wrote %s (%d vertices, %d edges)", output, g.n, g.m)
    else:
        click.echo(text, nl=False)


@cli.command()
@click.argument("n_max", type=click.IntRange(1, 7))
@click.option("--workers", type=int, default=None, help="Process pool size (default WORKERS).")
@click.option("--seed", type=int, default=None)
@click.option("--exact-cut", is_flag=True)
@click.pass_obj
@reports_errors
def sweep(system: WeightingSystem, n_max, workers, seed, exact_cut):
    """Weight and verify every labeled graph on up to N_MAX vertices."""
    if workers is not None:
        system.workers = workers
    report = system.sweep(n_max, seed=seed, exact_cut=exact_cut)
    click.echo(format_report(report), nl=False)
    if report.failures:
        sys.exit(EXIT_CONFLICTS)


@cli.command()
@click.option("--samples", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("-n", "sizes", type=click.IntRange(min=1), multiple=True, required=True)
@click.option("-p", "probabilities", type=click.FloatRange(0, 1), multiple=True, required=True)
@click.option("--seed", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--check-two", is_flag=True, help="Also count samples the oracle can weight with {1,2}.")
@click.pass_obj
@reports_errors
def batch(system: WeightingSystem, samples, sizes, probabilities, seed, workers, check_two):
    """Weight and verify seeded G(n,p) samples for every (n, p) pair."""
    if workers is not None:
        system.workers = workers
    report = system.batch(samples, sizes, probabilities, check_two=check_two, seed=seed)
    click.echo(format_report(report), nl=False)
    if report.failures:
        sys.exit(EXIT_CONFLICTS)


if __name__ == "__main__":
    cli()
