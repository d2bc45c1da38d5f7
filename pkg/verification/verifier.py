from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Mapping

from core.errors import DomainMismatch
from graphs.graph import Cut, Edge, Graph, weighted_degrees


@dataclass(frozen=True)
class Verdict:
    ok: bool
    conflicts: List[Edge] = field(default_factory=list)
    degrees: List[int] = field(default_factory=list, compare=False)


def verify_weighting(g: Graph, weights: Mapping[Edge, int]) -> Verdict:
    """Every edge whose endpoints share a weighted degree is a conflict."""
    keys = set(weights)
    if keys != g.edges:
        raise DomainMismatch(missing=g.edges - keys, extra=keys - g.edges)
    degrees = weighted_degrees(g, weights)
    conflicts = [(u, v) for u, v in g.sorted_edges() if degrees[u] == degrees[v]]
    return Verdict(not conflicts, conflicts, degrees)


def parity_audit(g: Graph, weights: Mapping[Edge, int], cut: Cut, v0: int) -> bool:
    """Weighted degrees are even on S and odd on T for every cut vertex except v0."""
    degrees = weighted_degrees(g, weights)
    return all(degrees[v] % 2 == (0 if v in cut.S else 1) for v in cut.ground if v != v0)
