"""
Unit-capacity flow network for an oriented demand over a cut.

Nodes 0..n-1 are the vertices of H, followed by the source and the sink.
Every cut edge {u,v} contributes the arcs (u,v) and (v,u); every demand edge
oriented (u,v) contributes (s,u) and (v,t) and no arc between u and v.
Parallel arcs are kept distinct.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, replace
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from core.errors import DecompositionShortfall, DemandNotSameSide, InvalidGraph
from graphs.graph import Cut, Edge, Graph, edge_key

logger = logging.getLogger(__name__)

Path = List[int]


@dataclass(frozen=True)
class OrientedDemand:
    F: FrozenSet[Edge]
    sigma: Mapping[Edge, Tuple[int, int]]

    def __post_init__(self) -> None:
        if set(self.sigma) != set(self.F):
            raise InvalidGraph("orientation must be defined exactly on the demand edges")
        for e, (tail, head) in self.sigma.items():
            if edge_key(tail, head) != e:
                raise InvalidGraph(f"orientation {(tail, head)} does not match edge {e}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[int, int]]) -> "OrientedDemand":
        sigma = {edge_key(tail, head): (tail, head) for tail, head in pairs}
        if len(sigma) != len(pairs):
            raise InvalidGraph("demand lists an edge twice")
        return cls(frozenset(sigma), sigma)

    def __len__(self) -> int:
        return len(self.F)

    def pairs(self) -> List[Tuple[int, int]]:
        return [self.sigma[e] for e in sorted(self.F)]

    def out_degree(self, v: int) -> int:
        return sum(1 for tail, _ in self.sigma.values() if tail == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, head in self.sigma.values() if head == v)


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    capacity: int = 1
    kind: str = "cut"
    edge: Optional[Edge] = None


@dataclass(frozen=True)
class FlowNetwork:
    node_count: int
    arcs: Tuple[Arc, ...]
    source: int
    sink: int

    @property
    def demand_size(self) -> int:
        return sum(1 for arc in self.arcs if arc.tail == self.source)

    def is_terminal(self, node: int) -> bool:
        return node in (self.source, self.sink)


@dataclass
class FlowResult:
    value: int
    arc_flows: List[int]
    min_cut_sides: Optional[Tuple[FrozenSet[int], FrozenSet[int]]] = None

    def original_sides(self, net: FlowNetwork) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        """The min-cut split restricted to the vertices of H."""
        if self.min_cut_sides is None:
            raise ValueError("flow met the demand; there is no short min cut")
        a_side, b_side = self.min_cut_sides
        terminals = {net.source, net.sink}
        return frozenset(a_side - terminals), frozenset(b_side - terminals)


def build_network(h: Graph, cut: Cut, demand: OrientedDemand) -> FlowNetwork:
    source, sink = h.n, h.n + 1
    arcs: List[Arc] = []
    for u, v in sorted(cut.cut_edges):
        arcs.append(Arc(u, v, kind="cut", edge=(u, v)))
        arcs.append(Arc(v, u, kind="cut", edge=(u, v)))
    for e in sorted(demand.F):
        if not h.has_edge(*e):
            raise InvalidGraph(f"demand edge {e} is not an edge of H")
        if e[0] not in cut.ground or e[1] not in cut.ground or not cut.same_side(*e):
            raise DemandNotSameSide(f"demand edge {e} crosses the cut")
        tail, head = demand.sigma[e]
        arcs.append(Arc(source, tail, kind="source", edge=e))
        arcs.append(Arc(head, sink, kind="sink", edge=e))
    return FlowNetwork(h.n + 2, tuple(arcs), source, sink)


def max_flow(net: FlowNetwork) -> FlowResult:
    """Shortest augmenting paths on the residual network; integral by construction."""
    out_arcs: List[List[int]] = [[] for _ in range(net.node_count)]
    in_arcs: List[List[int]] = [[] for _ in range(net.node_count)]
    for index, arc in enumerate(net.arcs):
        out_arcs[arc.tail].append(index)
        in_arcs[arc.head].append(index)
    flows = [0] * len(net.arcs)

    value = 0
    while True:
        parent = _residual_search(net, flows, out_arcs, in_arcs)
        if net.sink not in parent:
            break
        node = net.sink
        while node != net.source:
            index, forward = parent[node]
            arc = net.arcs[index]
            if forward:
                flows[index] += 1
                node = arc.tail
            else:
                flows[index] -= 1
                node = arc.head
        value += 1

    result = FlowResult(value, flows)
    if value < net.demand_size:
        reachable = frozenset(_residual_search(net, flows, out_arcs, in_arcs))
        result.min_cut_sides = (reachable, frozenset(range(net.node_count)) - reachable)
    logger.debug("max flow %d of demand %d", value, net.demand_size)
    return result


def _residual_search(
    net: FlowNetwork,
    flows: List[int],
    out_arcs: List[List[int]],
    in_arcs: List[List[int]],
) -> Dict[int, Tuple[int, bool]]:
    """Breadth-first search from the source; maps each reached node to (arc, forward)."""
    parent: Dict[int, Tuple[int, bool]] = {net.source: (-1, True)}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for index in out_arcs[u]:
            arc = net.arcs[index]
            if flows[index] < arc.capacity and arc.head not in parent:
                parent[arc.head] = (index, True)
                queue.append(arc.head)
        for index in in_arcs[u]:
            arc = net.arcs[index]
            if flows[index] > 0 and arc.tail not in parent:
                parent[arc.tail] = (index, False)
                queue.append(arc.tail)
        if net.sink in parent:
            break
    return parent


def cancel_opposite_arcs(flow: FlowResult, net: FlowNetwork) -> FlowResult:
    """Zero out every antiparallel cut-arc pair that carries flow both ways."""
    flows = list(flow.arc_flows)
    by_edge: Dict[Edge, List[int]] = {}
    for index, arc in enumerate(net.arcs):
        if arc.kind == "cut":
            by_edge.setdefault(arc.edge, []).append(index)
    canceled = 0
    for indices in by_edge.values():
        if len(indices) == 2 and all(flows[i] > 0 for i in indices):
            for i in indices:
                flows[i] -= 1
            canceled += 1
    if canceled:
        logger.debug("canceled %d opposite arc pairs", canceled)
    return replace(flow, arc_flows=flows)


def decompose_paths(flow: FlowResult, net: FlowNetwork) -> List[Path]:
    """
    Split the flow into `value` arc-disjoint source-sink paths.

    Walks always take the flow-carrying arc with the smallest head; a walk that
    revisits a node drops the closed loop, so emitted paths are simple.
    Circulations that never touch the source are left behind.
    """
    remaining: List[List[Tuple[int, int]]] = [[] for _ in range(net.node_count)]
    for index, arc in enumerate(net.arcs):
        remaining[arc.tail].extend((arc.head, index) for _ in range(flow.arc_flows[index]))
    for arcs in remaining:
        arcs.sort(reverse=True)

    paths: List[Path] = []
    for _ in range(flow.value):
        path = [net.source]
        position = {net.source: 0}
        node = net.source
        while node != net.sink:
            if not remaining[node]:
                raise DecompositionShortfall(
                    f"walk stuck at node {node} after {len(paths)} of {flow.value} paths"
                )
            node, _ = remaining[node].pop()
            if node in position:
                del path[position[node] + 1:]
                position = {n: i for i, n in enumerate(path)}
            else:
                position[node] = len(path)
                path.append(node)
        paths.append(path)
    return paths


def internal_nodes(path: Path, net: FlowNetwork) -> List[int]:
    return [node for node in path if not net.is_terminal(node)]


def dump_network(net: FlowNetwork) -> str:
    def name(node: int) -> str:
        if node == net.source:
            return "s"
        if node == net.sink:
            return "t"
        return str(node)

    lines = [f"# nodes {net.node_count} arcs {len(net.arcs)}"]
    lines.extend(f"{name(a.tail)} {name(a.head)} {a.capacity} {a.kind}" for a in net.arcs)
    return "\n".join(lines) + "\n"
