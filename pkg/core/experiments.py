"""
Batch experiments: exhaustive labeled sweeps and seeded G(n,p) samples.

Each run is checked with the independent verifier, the parity audit, the
flow-meets-demand identity and the cut-improvement bound.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from core.errors import BudgetExceeded
from graphs.generators import gnp_graph
from graphs.graph import ComponentKind, Edge, Graph, classify_components
from verification.oracle import brute_force_min_k
from verification.verifier import Verdict, parity_audit, verify_weighting
from weighting.algorithm import WeightingOptions, weight_graph
from weighting.certificate import Certificate

logger = logging.getLogger(__name__)

Verifier = Callable[[Graph, Mapping[Edge, int]], Verdict]

CHUNK = 2048


@dataclass
class RunTally:
    graphs: int = 0
    skipped_k2: int = 0
    weighted: int = 0
    failures: List[Tuple[int, List[Edge]]] = field(default_factory=list)
    max_restarts: int = 0
    max_improvements: int = 0
    weight_values: Counter = field(default_factory=Counter)
    distinct_weights: Counter = field(default_factory=Counter)
    two_weightable: int = 0
    two_checked: int = 0

    def merge(self, other: "RunTally") -> None:
        self.graphs += other.graphs
        self.skipped_k2 += other.skipped_k2
        self.weighted += other.weighted
        self.failures.extend(other.failures)
        self.max_restarts = max(self.max_restarts, other.max_restarts)
        self.max_improvements = max(self.max_improvements, other.max_improvements)
        self.weight_values.update(other.weight_values)
        self.distinct_weights.update(other.distinct_weights)
        self.two_weightable += other.two_weightable
        self.two_checked += other.two_checked


@dataclass
class ExperimentReport:
    label: str
    tallies: Dict[str, RunTally]
    seconds: float

    @property
    def total(self) -> RunTally:
        total = RunTally()
        for tally in self.tallies.values():
            total.merge(tally)
        return total

    @property
    def failures(self) -> int:
        return len(self.total.failures)


def has_k2_component(g: Graph) -> bool:
    return any(info.kind is ComponentKind.K2 for info in classify_components(g))


def audit_certificate(g: Graph, cert: Certificate, verifier: Verifier) -> List[str]:
    """Reasons a certificate fails; empty when it passes every check."""
    problems: List[str] = []
    weights = cert.weighting()
    if set(w.weight for w in cert.weights) - {1, 2, 3, 4}:
        problems.append("weight outside 1..4")
    verdict = verifier(g, weights)
    if not verdict.ok:
        problems.append(f"conflicts {verdict.conflicts}")
    for comp in cert.components:
        if comp.v0 is None:
            continue
        if not parity_audit(g, weights, comp.cut(g), comp.v0):
            problems.append(f"parity audit failed in component {comp.vertices}")
        if comp.flow_value != comp.demand_size:
            problems.append(f"flow {comp.flow_value} below demand {comp.demand_size}")
        ground = set(comp.S) | set(comp.T)
        h_edges = sum(1 for u, v in g.edges if u in ground and v in ground)
        if comp.cut_improvements > h_edges:
            problems.append(f"{comp.cut_improvements} cut improvements exceed |E(H)| = {h_edges}")
    return problems


def _tally_graph(
    tally: RunTally,
    g: Graph,
    key: int,
    options: WeightingOptions,
    verifier: Verifier,
    check_two: bool = False,
) -> None:
    tally.graphs += 1
    if has_k2_component(g):
        tally.skipped_k2 += 1
        return
    cert = weight_graph(g, options)
    tally.weighted += 1
    problems = audit_certificate(g, cert, verifier)
    if problems:
        logger.warning("graph %d failed: %s", key, "; ".join(problems))
        tally.failures.append((key, g.sorted_edges()))
    tally.max_restarts = max([tally.max_restarts] + [c.restarts for c in cert.components])
    tally.max_improvements = max([tally.max_improvements] + [c.cut_improvements for c in cert.components])
    tally.weight_values.update(w.weight for w in cert.weights)
    tally.distinct_weights[len(cert.distinct_weights())] += 1
    if check_two:
        try:
            tally.two_weightable += int(brute_force_min_k(g, 2).found)
            tally.two_checked += 1
        except BudgetExceeded:
            pass


def enumerate_labeled_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Tuple[int, Graph]]:
    """All labeled graphs on n vertices, indexed by their edge mask over sorted pairs."""
    pairs = list(combinations(range(n), 2))
    stop = (1 << len(pairs)) if stop is None else stop
    for mask in range(start, stop):
        edges = frozenset(pair for bit, pair in enumerate(pairs) if (mask >> bit) & 1)
        yield mask, Graph(n, edges)


def _check_pool_options(options: WeightingOptions, workers: int) -> None:
    if workers > 1 and options.cut_source is not None:
        raise ValueError("cut_source overrides run in-process only; use workers=1")


def _sweep_chunk(n: int, start: int, stop: int, options: WeightingOptions, verifier: Verifier) -> RunTally:
    tally = RunTally()
    for mask, g in enumerate_labeled_graphs(n, start, stop):
        _tally_graph(tally, g, mask, options, verifier)
    return tally


def run_sweep(
    n_max: int,
    workers: int = 1,
    options: WeightingOptions = WeightingOptions(),
    verifier: Verifier = verify_weighting,
) -> ExperimentReport:
    _check_pool_options(options, workers)
    started = time.perf_counter()
    tallies: Dict[str, RunTally] = {}
    for n in range(1, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        chunks = [(start, min(start + CHUNK, total)) for start in range(0, total, CHUNK)]
        tally = RunTally()
        if workers > 1 and len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_sweep_chunk, n, a, b, options, verifier) for a, b in chunks]
                for future in futures:
                    tally.merge(future.result())
        else:
            for a, b in chunks:
                tally.merge(_sweep_chunk(n, a, b, options, verifier))
        logger.info("n=%d: %d graphs, %d weighted, %d failures", n, tally.graphs, tally.weighted, len(tally.failures))
        tallies[f"n={n}"] = tally
    return ExperimentReport(f"sweep up to n={n_max}", tallies, time.perf_counter() - started)


def _batch_cell(
    n: int, p: float, samples: int, seed: int, options: WeightingOptions, verifier: Verifier, check_two: bool
) -> RunTally:
    tally = RunTally()
    for i in range(samples):
        g = gnp_graph(n, p, seed=seed + i)
        _tally_graph(tally, g, seed + i, options, verifier, check_two)
    return tally


def run_batch(
    samples: int,
    sizes: Sequence[int],
    probabilities: Sequence[float],
    seed: int = 0,
    workers: int = 1,
    options: WeightingOptions = WeightingOptions(),
    verifier: Verifier = verify_weighting,
    check_two: bool = False,
) -> ExperimentReport:
    """`samples` seeded G(n,p) graphs per (n, p) cell; cell seeds are disjoint ranges."""
    _check_pool_options(options, workers)
    started = time.perf_counter()
    cells = [(n, p) for n in sizes for p in probabilities]
    args = [
        (n, p, samples, seed + index * samples, options, verifier, check_two)
        for index, (n, p) in enumerate(cells)
    ]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_batch_cell, *zip(*args)))
    else:
        results = [_batch_cell(*a) for a in args]
    tallies = {f"n={n} p={p}": tally for (n, p), tally in zip(cells, results)}
    return ExperimentReport(f"G(n,p) batch, {samples} samples per cell", tallies, time.perf_counter() - started)


def format_report(report: ExperimentReport) -> str:
    header = f"{'cell':<14}{'graphs':>8}{'k2':>8}{'weighted':>10}{'fail':>6}{'restarts':>10}{'2-wt':>10}  weights"
    lines = [report.label, header]
    for label, tally in list(report.tallies.items()) + [("total", report.total)]:
        weights = " ".join(f"{w}:{c}" for w, c in sorted(tally.weight_values.items()))
        two = f"{tally.two_weightable}/{tally.two_checked}" if tally.two_checked else "-"
        lines.append(
            f"{label:<14}{tally.graphs:>8}{tally.skipped_k2:>8}{tally.weighted:>10}"
            f"{len(tally.failures):>6}{tally.max_restarts:>10}{two:>10}  {weights}"
        )
    distinct = " ".join(f"{d}:{c}" for d, c in sorted(report.total.distinct_weights.items()))
    lines.append(f"distinct weights used per graph: {distinct}")
    lines.append(f"max cut improvements: {report.total.max_improvements}")
    lines.append(f"runtime: {report.seconds:.2f}s")
    return "\n".join(lines) + "\n"


__all__ = [
    "ExperimentReport",
    "RunTally",
    "audit_certificate",
    "enumerate_labeled_graphs",
    "format_report",
    "has_k2_component",
    "run_batch",
    "run_sweep",
]
