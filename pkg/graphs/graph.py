from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.errors import InvalidGraph, K2Component

Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on the dense vertex ids 0..n-1.

    Neighbors are kept both as sorted tuples (deterministic iteration) and as
    frozensets (constant-time adjacency queries).
    """

    n: int
    edges: FrozenSet[Edge]
    _neighbors: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _neighbor_sets: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidGraph(f"vertex count must be nonnegative, got {self.n}")
        adjacency: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if u > v:
                raise InvalidGraph(f"edge ({u},{v}) is not in canonical (low, high) order")
            if u < 0 or v >= self.n:
                raise InvalidGraph(f"edge ({u},{v}) has an endpoint outside 0..{self.n - 1}")
            adjacency[u].append(v)
            adjacency[v].append(u)
        object.__setattr__(self, "_neighbors", tuple(tuple(sorted(a)) for a in adjacency))
        object.__setattr__(self, "_neighbor_sets", tuple(frozenset(a) for a in adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        keys = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            key = edge_key(u, v)
            if key in keys:
                raise InvalidGraph(f"duplicate edge {{{key[0]},{key[1]}}}")
            keys.add(key)
        return cls(n, frozenset(keys))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Cut:
    """Bipartition (S, T) of `ground` with its cut edges cached."""

    ground: FrozenSet[int]
    S: FrozenSet[int]
    T: FrozenSet[int]
    cut_edges: FrozenSet[Edge]

    @classmethod
    def from_side(
        cls, g: Graph, S: Iterable[int], ground: Optional[Iterable[int]] = None
    ) -> "Cut":
        ground_set = frozenset(g.vertices() if ground is None else ground)
        s_side = frozenset(S)
        if not s_side <= ground_set:
            raise InvalidGraph(f"side S has vertices outside the ground set: {sorted(s_side - ground_set)}")
        t_side = ground_set - s_side
        cut_edges = frozenset(
            (u, v)
            for u, v in g.edges
            if u in ground_set and v in ground_set and ((u in s_side) != (v in s_side))
        )
        return cls(ground_set, s_side, t_side, cut_edges)

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    def same_side(self, u: int, v: int) -> bool:
        return (u in self.S) == (v in self.S)

    def flipped(self, g: Graph, vertices: Iterable[int]) -> "Cut":
        """Cut with the side membership of `vertices` swapped."""
        flip = frozenset(vertices)
        return Cut.from_side(g, self.S.symmetric_difference(flip), self.ground)


class ComponentKind(str, Enum):
    ISOLATED = "isolated-vertex"
    K2 = "K2"
    WEIGHTABLE = "weightable"


@dataclass(frozen=True)
class ComponentInfo:
    vertices: Tuple[int, ...]
    kind: ComponentKind


@dataclass(frozen=True)
class Subgraph:
    """Induced subgraph with both directions of the id mapping."""

    graph: Graph
    to_parent: Tuple[int, ...]
    to_child: Mapping[int, int]

    def lift(self, v: int) -> int:
        return self.to_parent[v]

    def lower(self, v: int) -> int:
        return self.to_child[v]

    def lift_edge(self, e: Edge) -> Edge:
        return edge_key(self.to_parent[e[0]], self.to_parent[e[1]])


def connected_components(g: Graph) -> List[List[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    components: List[List[int]] = []
    for start in g.vertices():
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = [start]
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        components.append(sorted(members))
    return components


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def classify_components(g: Graph) -> List[ComponentInfo]:
    infos = []
    for members in connected_components(g):
        if len(members) == 1:
            kind = ComponentKind.ISOLATED
        elif len(members) == 2:
            kind = ComponentKind.K2
        else:
            kind = ComponentKind.WEIGHTABLE
        infos.append(ComponentInfo(tuple(members), kind))
    return infos


def validate(g: Graph) -> List[ComponentInfo]:
    """
    Tag every component; a K2 component is fatal since no edge-weighting of a
    single edge can give its endpoints different weighted degrees.
    """
    infos = classify_components(g)
    for info in infos:
        if info.kind is ComponentKind.K2:
            raise K2Component(*info.vertices)
    return infos


def find_non_articulation_vertex(g: Graph) -> int:
    """Smallest-id leaf of the DFS tree grown from vertex 0 (sorted neighbor order)."""
    if g.n < 2:
        raise InvalidGraph("a non-articulation vertex is only defined here for n >= 2")
    tree_degree = [0] * g.n
    visited = [False] * g.n
    visited[0] = True
    stack = [(0, iter(g.neighbors(0)))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if not visited[w]:
                visited[w] = True
                tree_degree[v] += 1
                tree_degree[w] += 1
                stack.append((w, iter(g.neighbors(w))))
                break
        else:
            stack.pop()
    if not all(visited):
        raise InvalidGraph("graph is not connected")
    return min(v for v in g.vertices() if tree_degree[v] == 1)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Subgraph:
    members = sorted(set(vs))
    for v in members:
        if not 0 <= v < g.n:
            raise InvalidGraph(f"vertex {v} is not in the graph")
    to_child: Dict[int, int] = {v: i for i, v in enumerate(members)}
    edges = frozenset(
        edge_key(to_child[u], to_child[v])
        for u, v in g.edges
        if u in to_child and v in to_child
    )
    return Subgraph(Graph(len(members), edges), tuple(members), to_child)


def weighted_degrees(g: Graph, weights: Mapping[Edge, int]) -> List[int]:
    degrees = [0] * g.n
    for (u, v), w in weights.items():
        degrees[u] += w
        degrees[v] += w
    return degrees
