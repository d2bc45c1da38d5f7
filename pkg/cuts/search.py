"""
Cut search on the reduced graph H.

The weighting argument needs a cut whose cut graph is connected and for which
the oriented-demand flow is feasible. Both are implied by a maximum cut, but
every step below only needs a strict improvement, so the loop terminates
after at most |E(H)| improvements without solving max-cut exactly.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from configs.settings import EXACT_CUT_THRESHOLD
from core.errors import InvalidGraph, NotImproving, TooLarge
from graphs.graph import Cut, Graph

logger = logging.getLogger(__name__)

INITIAL_KINDS = frozenset({"local_search", "exact_max_cut", "given"})


@dataclass
class CutSearchState:
    cut: Cut
    history: List[Tuple[str, int]] = field(default_factory=list)

    @classmethod
    def start(cls, kind: str, cut: Cut) -> "CutSearchState":
        if kind not in INITIAL_KINDS:
            raise ValueError(f"unknown initial cut kind {kind!r}")
        return cls(cut, [(kind, cut.size)])

    @property
    def cut_size(self) -> int:
        return self.cut.size

    @property
    def improvements(self) -> int:
        return sum(1 for kind, _ in self.history if kind not in INITIAL_KINDS)

    def record(self, kind: str, cut: Cut) -> None:
        if cut.size <= self.cut.size:
            raise NotImproving(
                f"{kind} step left the cut at size {cut.size} (was {self.cut.size})", stage="cut"
            )
        self.cut = cut
        self.history.append((kind, cut.size))


def local_search_cut(h: Graph, seed: int = 0) -> Cut:
    """1-flip local search; seed 0 starts from the even-id side, other seeds from a random side."""
    if seed:
        rng = random.Random(seed)
        in_s = [rng.random() < 0.5 for _ in h.vertices()]
    else:
        in_s = [v % 2 == 0 for v in h.vertices()]

    sweeps = 0
    improved = True
    while improved:
        improved = False
        sweeps += 1
        for v in h.vertices():
            same = sum(1 for w in h.neighbors(v) if in_s[w] == in_s[v])
            if 2 * same > h.degree(v):
                in_s[v] = not in_s[v]
                improved = True
    cut = Cut.from_side(h, [v for v in h.vertices() if in_s[v]])
    logger.debug("local search: cut size %d after %d sweeps (seed %d)", cut.size, sweeps, seed)
    return cut


def is_one_flip_maximal(h: Graph, cut: Cut) -> bool:
    for v in cut.ground:
        same = sum(1 for w in h.neighbors(v) if w in cut.ground and cut.same_side(v, w))
        across = sum(1 for w in h.neighbors(v) if w in cut.ground and not cut.same_side(v, w))
        if same > across:
            return False
    return True


def exact_max_cut(h: Graph, threshold: Optional[int] = None) -> Cut:
    """
    Maximum cut by enumerating every bipartition with vertex 0 in S.
    Among maximum cuts, the lexicographically smallest sorted S is returned.
    """
    threshold = EXACT_CUT_THRESHOLD if threshold is None else threshold
    if h.n > threshold:
        raise TooLarge(h.n, threshold)
    if h.n <= 1:
        return Cut.from_side(h, h.vertices())

    # bit v-1 of a mask puts vertex v into T
    masks = np.arange(1 << (h.n - 1), dtype=np.int64)
    zeros = np.zeros_like(masks)

    def in_t(v: int) -> np.ndarray:
        return zeros if v == 0 else (masks >> (v - 1)) & 1

    sizes = np.zeros(masks.shape, dtype=np.int32)
    for u, v in h.edges:
        sizes += (in_t(u) ^ in_t(v)).astype(np.int32)
    best = int(sizes.max())

    def s_side(mask: int) -> Tuple[int, ...]:
        return (0,) + tuple(v for v in range(1, h.n) if not (mask >> (v - 1)) & 1)

    chosen = min((s_side(int(mask)) for mask in np.flatnonzero(sizes == best)))
    cut = Cut.from_side(h, chosen)
    assert cut.size == best
    return cut


def cut_graph_components(h: Graph, cut: Cut) -> List[List[int]]:
    """Components of the bipartite cut graph G(S,T) on the ground set."""
    seen = set()
    components: List[List[int]] = []
    for start in sorted(cut.ground):
        if start in seen:
            continue
        seen.add(start)
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in h.neighbors(u):
                if w in cut.ground and w not in seen and not cut.same_side(u, w):
                    seen.add(w)
                    members.append(w)
                    queue.append(w)
        components.append(sorted(members))
    return components


def repair_cut_connectivity(h: Graph, cut: Cut, state: Optional[CutSearchState] = None) -> Cut:
    """
    Flip a cut-graph component until the cut graph is connected.

    Every edge leaving a cut-graph component is same-side, so swapping the
    sides inside the component turns at least one of them into a cut edge.
    """
    while True:
        components = cut_graph_components(h, cut)
        if len(components) <= 1:
            return cut
        component = _first_with_leaving_edge(h, cut, components)
        if component is None:
            raise InvalidGraph("repair needs a connected graph")
        repaired = cut.flipped(h, component)
        if repaired.size <= cut.size:
            raise NotImproving(
                f"flipping component {component} did not grow the cut", stage="cut"
            )
        logger.debug("repair: flipped %d vertices, cut %d -> %d", len(component), cut.size, repaired.size)
        if state is not None:
            state.record("repair", repaired)
        cut = repaired


def _first_with_leaving_edge(
    h: Graph, cut: Cut, components: List[List[int]]
) -> Optional[List[int]]:
    for component in components:
        members = set(component)
        for v in component:
            if any(w in cut.ground and w not in members for w in h.neighbors(v)):
                return component
    return None


def improve_cut_from_mincut(
    h: Graph,
    cut: Cut,
    F: Iterable[Tuple[int, int]],
    min_cut_sides: Tuple[FrozenSet[int], FrozenSet[int]],
) -> Cut:
    """
    Turn a short flow into a larger cut.

    With (A, B) the residual-reachability split of the vertices, the cut
    ((S∩A) ∪ (T∩B), (S∩B) ∪ (T∩A)) drops the cut edges between A and B and
    gains the same-side edges between A and B; a flow below |F| forces the
    gain to exceed the loss. `F` holds the oriented demand pairs (tail, head).
    """
    a_side, b_side = min_cut_sides
    improved = Cut.from_side(h, (cut.S & a_side) | (cut.T & b_side), cut.ground)
    crossing_demand = sum(1 for tail, head in F if tail in a_side and head in b_side)
    if improved.size <= cut.size:
        raise NotImproving(
            f"min-cut split gave cut size {improved.size}, not above {cut.size}", stage="cut"
        )
    logger.info(
        "flow fell short: cut %d -> %d (%d demand edges cross the min cut)",
        cut.size,
        improved.size,
        crossing_demand,
    )
    return improved
