"""
Brute-force oracle for the smallest weight set {1..k} admitting a
vertex-coloring edge-weighting.

Weightings are enumerated lexicographically over the sorted edge list with
backtracking: a vertex's weighted degree is final once its last incident edge
is assigned, and any clash with an already-final neighbor prunes the branch.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from configs.settings import ORACLE_BUDGET
from core.errors import BudgetExceeded
from graphs.graph import Edge, Graph, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinKResult:
    """k is None when no k <= k_max works (NotFound)."""

    k: Optional[int]
    k_max: int
    witness: Dict[Edge, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.k is not None

    @property
    def exact(self) -> bool:
        return True


@dataclass(frozen=True)
class SampleBound:
    """Upper bound from random weightings; never an exact minimum."""

    k_upper: Optional[int]
    samples: int
    hits: Dict[int, int]
    witness: Dict[Edge, int] = field(default_factory=dict)
    k_max: int = 4

    @property
    def k(self) -> Optional[int]:
        return self.k_upper

    @property
    def found(self) -> bool:
        return self.k_upper is not None

    @property
    def exact(self) -> bool:
        return False


def enumeration_bound(k: int, edges: int) -> int:
    return k ** edges


def brute_force_min_k(
    g: Graph, k_max: int = 4, budget: Optional[int] = None, workers: int = 1
) -> MinKResult:
    validate(g)
    budget = ORACLE_BUDGET if budget is None else budget
    edges = g.sorted_edges()
    for k in range(1, k_max + 1):
        bound = enumeration_bound(k, len(edges))
        if bound > budget:
            raise BudgetExceeded(k, len(edges), bound, budget)
        witness = _search_parallel(g, edges, k, workers) if workers > 1 else _search(g, edges, k, ())
        if witness is not None:
            logger.debug("min k = %d over %d edges", k, len(edges))
            return MinKResult(k, k_max, dict(zip(edges, witness)))
    return MinKResult(None, k_max)


def _search(g: Graph, edges: Sequence[Edge], k: int, prefix: Tuple[int, ...]) -> Optional[List[int]]:
    """Lexicographically first weighting in {1..k} extending `prefix`, or None."""
    m = len(edges)
    completes_at = [-1] * g.n
    for index, (u, v) in enumerate(edges):
        completes_at[u] = index
        completes_at[v] = index
    finishing: List[List[int]] = [[] for _ in range(m)]
    for v in g.vertices():
        if completes_at[v] >= 0:
            finishing[completes_at[v]].append(v)

    degree = [0] * g.n
    assignment = [0] * m

    def consistent(index: int) -> bool:
        for v in finishing[index]:
            for w in g.neighbors(v):
                if completes_at[w] <= index and degree[w] == degree[v]:
                    return False
        return True

    def extend(index: int) -> bool:
        if index == m:
            return True
        u, v = edges[index]
        choices = (prefix[index],) if index < len(prefix) else range(1, k + 1)
        for weight in choices:
            assignment[index] = weight
            degree[u] += weight
            degree[v] += weight
            if consistent(index) and extend(index + 1):
                return True
            degree[u] -= weight
            degree[v] -= weight
        return False

    return list(assignment) if extend(0) else None


def _search_parallel(g: Graph, edges: Sequence[Edge], k: int, workers: int) -> Optional[List[int]]:
    """Disjoint prefix blocks in lexicographic order; the first block with a witness wins."""
    depth = min(2, len(edges))
    prefixes = list(itertools.product(range(1, k + 1), repeat=depth))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_search, *zip(*[(g, edges, k, prefix) for prefix in prefixes]))
        for witness in results:
            if witness is not None:
                return witness
    return None


def sample_min_k(
    g: Graph, k_max: int = 4, samples: int = 10_000, seed: int = 0
) -> SampleBound:
    """Smallest k for which some sampled weighting in {1..k} is vertex-coloring."""
    validate(g)
    edges = g.sorted_edges()
    rng = np.random.default_rng(seed)
    incidence = np.zeros((len(edges), g.n), dtype=np.int64)
    for row, (u, v) in enumerate(edges):
        incidence[row, u] = 1
        incidence[row, v] = 1
    us = np.array([u for u, _ in edges], dtype=np.int64)
    vs = np.array([v for _, v in edges], dtype=np.int64)

    hits: Dict[int, int] = {}
    for k in range(1, k_max + 1):
        weights = rng.integers(1, k + 1, size=(samples, len(edges)))
        degrees = weights @ incidence
        proper = np.all(degrees[:, us] != degrees[:, vs], axis=1)
        hits[k] = int(proper.sum())
        if hits[k]:
            first = int(np.argmax(proper))
            witness = {e: int(w) for e, w in zip(edges, weights[first])}
            return SampleBound(k, samples, hits, witness, k_max)
    return SampleBound(None, samples, hits, k_max=k_max)
