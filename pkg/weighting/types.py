from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from graphs.graph import Edge, Graph, edge_key

FINAL_WEIGHTS = frozenset({1, 2, 3, 4})


@dataclass
class EdgeWeighting:
    """Edge -> weight map; holds the provisional, intermediate and final weightings."""

    weights: Dict[Edge, int]

    @classmethod
    def constant(cls, g: Graph, value: int) -> "EdgeWeighting":
        return cls({e: value for e in g.edges})

    def copy(self) -> "EdgeWeighting":
        return EdgeWeighting(dict(self.weights))

    def __getitem__(self, e: Edge) -> int:
        return self.weights[e]

    def set(self, u: int, v: int, value: int) -> None:
        self.weights[edge_key(u, v)] = value

    def add(self, u: int, v: int, delta: int) -> int:
        key = edge_key(u, v)
        self.weights[key] += delta
        return self.weights[key]

    def weighted_degree(self, g: Graph, v: int) -> int:
        return sum(self.weights[edge_key(v, w)] for w in g.neighbors(v))

    def out_of_range(self, allowed: Iterable[int] = FINAL_WEIGHTS) -> List[Edge]:
        allowed = set(allowed)
        return sorted(e for e, w in self.weights.items() if w not in allowed)


@dataclass
class TargetAssignment:
    """
    Greedy targets per vertex: k (extra even increments), g (pre-color on
    N(v0)), t (weighted degree when targeted) and f (designated color).
    """

    order: List[int]
    k: Dict[int, int] = field(default_factory=dict)
    g: Dict[int, int] = field(default_factory=dict)
    t: Dict[int, int] = field(default_factory=dict)
    f: Dict[int, int] = field(default_factory=dict)
    index: Dict[int, int] = field(init=False)

    def __post_init__(self) -> None:
        # v0 is not in `order` and has index 0; processing indices start at 1
        self.index = {v: i for i, v in enumerate(self.order, start=1)}

    def color_value(self, v: int) -> Optional[int]:
        if v in self.f:
            return self.f[v]
        return self.g.get(v)


@dataclass
class ComponentRun:
    """Pipeline result for one connected component, in component-local ids."""

    graph: Graph
    weighting: EdgeWeighting
    colors: Dict[int, int]
    v0: int
    S: List[int]
    T: List[int]
    cut_history: List[Tuple[str, int]]
    demand_size: int
    flow_value: int
    path_count: int
    restarts: int
    stages: List[Dict[str, Any]] = field(default_factory=list)
