"""
Vertex-coloring edge-weighting with weights {1,2,3,4}.

Per connected component with at least three vertices:

1. pick v0 whose removal keeps the component connected; H = G - v0;
2. find a cut (S,T) of H with connected cut graph;
3. parity pass: weights 2/3 on a spanning tree of the cut graph (1/2 on the
   edge v0-r) so weighted degrees are even on S and odd on T;
4. greedy pre-colors on N(v0), recolor the closed star of v0, then greedy
   designated colors f on the remaining vertices; each vertex still needs
   2k more weighted degree;
5. orient a same-side edge set F encoding those demands, route |F| unit
   flows along the cut graph and shift weights along every path;
6. add 1 on every F edge.

When the flow falls short of |F| the min cut yields a strictly larger cut of
H and the pipeline restarts from step 3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from configs.settings import EXACT_CUT_THRESHOLD
from coloring.star import StarInstance, check_h_properties, compute_h, select_case
from core.errors import (
    CutGraphDisconnected,
    InsufficientNeighbors,
    InternalInvariantViolation,
    TooLarge,
    WeightOutOfRange,
)
from cuts.search import (
    CutSearchState,
    exact_max_cut,
    improve_cut_from_mincut,
    local_search_cut,
    repair_cut_connectivity,
)
from edge_weighting import __version__
from flows.network import (
    OrientedDemand,
    build_network,
    cancel_opposite_arcs,
    decompose_paths,
    internal_nodes,
    max_flow,
)
from graphs.graph import (
    ComponentKind,
    Cut,
    Graph,
    Subgraph,
    edge_key,
    find_non_articulation_vertex,
    induced_subgraph,
    validate,
)
from verification.verifier import verify_weighting
from weighting.certificate import (
    Certificate,
    ComponentTrace,
    CutStep,
    GraphEcho,
    VerdictModel,
    VertexEntry,
    WeightEntry,
)
from weighting.types import ComponentRun, EdgeWeighting, TargetAssignment

logger = logging.getLogger(__name__)

CutSource = Callable[[Graph], Cut]


@dataclass(frozen=True)
class WeightingOptions:
    seed: int = 0
    exact_cut: bool = False
    exact_cut_threshold: int = EXACT_CUT_THRESHOLD
    trace: bool = False
    # overrides the initial cut of H (used to start from deliberately poor cuts)
    cut_source: Optional[CutSource] = None


def _side_parity(cut: Cut, v: int) -> int:
    return 0 if v in cut.S else 1


def initial_parity_weighting(g: Graph, v0: int, cut: Cut, r: int) -> EdgeWeighting:
    """Weights 2 everywhere, then fix parities leaf-to-root on a BFS tree of the cut graph."""
    mu = EdgeWeighting.constant(g, 2)
    parent: Dict[int, Optional[int]] = {r: None}
    order = [r]
    for u in order:
        for w in g.neighbors(u):
            if w != v0 and w in cut.ground and w not in parent and not cut.same_side(u, w):
                parent[w] = u
                order.append(w)
    if len(order) != len(cut.ground):
        raise CutGraphDisconnected(
            f"cut graph spans {len(order)} of {len(cut.ground)} vertices from root {r}"
        )

    for v in reversed(order[1:]):
        if mu.weighted_degree(g, v) % 2 != _side_parity(cut, v):
            mu.set(v, parent[v], 3)
    if mu.weighted_degree(g, r) % 2 != _side_parity(cut, r):
        mu.set(v0, r, 1)

    wrong = [v for v in cut.ground if mu.weighted_degree(g, v) % 2 != _side_parity(cut, v)]
    if wrong:
        raise InternalInvariantViolation(f"parity wrong at {sorted(wrong)}", stage="parity")
    return mu


def greedy_targets(
    g: Graph,
    v0: int,
    cut: Cut,
    weighting: EdgeWeighting,
    targets: TargetAssignment,
    vertices: Sequence[int],
) -> TargetAssignment:
    """
    For each vertex in processing order pick the smallest k >= 0 such that
    s(v) + 2k differs from the value of every earlier neighbor. Vertices of
    N(v0) receive it as pre-color g, the others as designated color f.
    """
    star = set(g.neighbors(v0))
    for v in vertices:
        base = weighting.weighted_degree(g, v)
        earlier = [u for u in g.neighbors(v) if u != v0 and targets.index[u] < targets.index[v]]
        blocked = {targets.color_value(u) for u in earlier}
        k = 0
        while base + 2 * k in blocked:
            k += 1
        same_side = sum(1 for u in earlier if cut.same_side(u, v))
        if same_side < k:
            raise InternalInvariantViolation(
                f"vertex {v} needs k={k} but has {same_side} earlier same-side neighbors",
                stage="targets",
            )
        targets.k[v] = k
        if v in star:
            targets.g[v] = base + 2 * k
        else:
            targets.t[v] = base
            targets.f[v] = base + 2 * k
    return targets


def splice_lemma3(
    g: Graph, v0: int, mu: EdgeWeighting, targets: TargetAssignment
) -> Tuple[EdgeWeighting, TargetAssignment]:
    """Add the star recoloring h to mu and fix f on N(v0) and v0."""
    neighborhood = g.neighbors(v0)
    targets.g[v0] = mu.weighted_degree(g, v0)

    if len(neighborhood) == 1:
        r = neighborhood[0]
        omega = mu.copy()
        targets.f[v0] = omega.weighted_degree(g, v0)
        targets.f[r] = targets.t[r] = omega.weighted_degree(g, r)
        if targets.f[r] <= targets.f[v0]:
            raise InternalInvariantViolation(
                f"f({r}) = {targets.f[r]} does not exceed f(v0) = {targets.f[v0]}", stage="star"
            )
        return omega, targets

    star = induced_subgraph(g, (v0, *neighborhood))
    instance = StarInstance(
        star.graph, star.lower(v0), {i: targets.g[v] for i, v in enumerate(star.to_parent)}
    )
    hf = compute_h(instance)
    violations = check_h_properties(instance, hf)
    if violations:
        raise InternalInvariantViolation("; ".join(violations), stage="star")

    omega = mu.copy()
    for e, value in hf.h.items():
        if value:
            omega.add(*star.lift_edge(e), value)
    for i, v in enumerate(star.to_parent):
        targets.f[v] = hf.f[i]
    for v in neighborhood:
        targets.t[v] = omega.weighted_degree(g, v)

    if targets.f[v0] != omega.weighted_degree(g, v0):
        raise InternalInvariantViolation("f(v0) differs from its weighted degree", stage="star")
    for (u, v), w in omega.weights.items():
        allowed = range(1, 5) if v0 in (u, v) else (2, 3)
        if w not in allowed:
            raise InternalInvariantViolation(f"weight {w} on edge {(u, v)} after splice", stage="star")
    return omega, targets


def build_F_sigma(g: Graph, targets: TargetAssignment, cut: Cut) -> OrientedDemand:
    """
    Each vertex with k > 0 selects its k smallest-index earlier same-side
    neighbors. S vertices orient the edge away from themselves, T vertices
    towards themselves.
    """
    pairs: List[Tuple[int, int]] = []
    for v in targets.order:
        k = targets.k.get(v, 0)
        if not k:
            continue
        eligible = sorted(
            (
                u
                for u in g.neighbors(v)
                if u in targets.index
                and targets.index[u] < targets.index[v]
                and cut.same_side(u, v)
            ),
            key=targets.index.__getitem__,
        )
        if len(eligible) < k:
            raise InsufficientNeighbors(f"vertex {v} needs {k} demand edges, has {len(eligible)}")
        for u in eligible[:k]:
            pairs.append((v, u) if v in cut.S else (u, v))
    return OrientedDemand.from_pairs(pairs)


def apply_path_modifications(
    omega: EdgeWeighting, cut: Cut, paths: Sequence[Sequence[int]]
) -> EdgeWeighting:
    """
    Alternately raise and lower weights along each path: an edge left from an
    S vertex gains 1, an edge left from a T vertex loses 1. Internal vertices
    keep their weighted degree.
    """
    result = omega.copy()
    for path in paths:
        for u, w in zip(path, path[1:]):
            if edge_key(u, w) not in cut.cut_edges:
                raise InternalInvariantViolation(f"path step {u}->{w} is not a cut edge", stage="paths")
            weight = result.add(u, w, 1 if u in cut.S else -1)
            if not 1 <= weight <= 4:
                raise WeightOutOfRange(f"edge {edge_key(u, w)} reached weight {weight}")
    return result


def finalize_F_increment(omega: EdgeWeighting, demand: OrientedDemand) -> EdgeWeighting:
    result = omega.copy()
    for u, v in demand.F:
        result.add(u, v, 1)
    return result


def _initial_cut(h: Graph, options: WeightingOptions) -> CutSearchState:
    if options.cut_source is not None:
        return CutSearchState.start("given", options.cut_source(h))
    if options.exact_cut:
        try:
            return CutSearchState.start("exact_max_cut", exact_max_cut(h, options.exact_cut_threshold))
        except TooLarge as exc:
            logger.warning("%s; using local search instead", exc)
    return CutSearchState.start("local_search", local_search_cut(h, options.seed))


def _lift_cut(hsub: Subgraph, g: Graph, cut: Cut) -> Cut:
    return Cut.from_side(g, (hsub.lift(v) for v in cut.S), hsub.to_parent)


def _check_conservation(
    g: Graph, cut: Cut, targets: TargetAssignment, demand: OrientedDemand, omega: EdgeWeighting
) -> None:
    for v in cut.ground:
        shift = demand.out_degree(v) - demand.in_degree(v)
        expected = shift if v in cut.S else -shift
        actual = omega.weighted_degree(g, v) - targets.t[v]
        if actual != expected:
            raise InternalInvariantViolation(
                f"vertex {v} shifted by {actual}, expected {expected}", stage="paths"
            )


def _check_final(g: Graph, v0: int, targets: TargetAssignment, omega: EdgeWeighting) -> None:
    bad = omega.out_of_range()
    if bad:
        raise WeightOutOfRange(f"final weights outside 1..4 on {bad}", stage="finalize")
    for v in g.vertices():
        degree = omega.weighted_degree(g, v)
        if degree != targets.f[v]:
            raise InternalInvariantViolation(
                f"vertex {v} has weighted degree {degree}, designated {targets.f[v]}", stage="finalize"
            )
        if v != v0 and targets.f[v] != targets.t[v] + 2 * targets.k[v]:
            raise InternalInvariantViolation(f"f({v}) != t({v}) + 2k({v})", stage="finalize")
    for u, v in g.edges:
        if targets.f[u] == targets.f[v]:
            raise InternalInvariantViolation(f"designated colors clash on {{{u},{v}}}", stage="finalize")


def weight_component(
    g: Graph, options: WeightingOptions = WeightingOptions(), label: Callable[[int], int] = int
) -> ComponentRun:
    """Run the pipeline on a connected graph with at least three vertices."""
    if g.n < 3:
        raise InternalInvariantViolation(f"component with {g.n} vertices", stage="pipeline")
    v0 = find_non_articulation_vertex(g)
    hsub = induced_subgraph(g, (v for v in g.vertices() if v != v0))
    h = hsub.graph
    state = _initial_cut(h, options)
    repair_cut_connectivity(h, state.cut, state)

    neighborhood = list(g.neighbors(v0))
    in_star = set(neighborhood)
    rest = [v for v in g.vertices() if v != v0 and v not in in_star]
    r = neighborhood[0]
    stages: List[Dict[str, Any]] = []
    restarts = 0

    while True:
        cut = _lift_cut(hsub, g, state.cut)
        mu = initial_parity_weighting(g, v0, cut, r)
        targets = TargetAssignment(neighborhood + rest)
        greedy_targets(g, v0, cut, mu, targets, neighborhood)
        omega, targets = splice_lemma3(g, v0, mu, targets)
        greedy_targets(g, v0, cut, omega, targets, rest)
        demand = build_F_sigma(g, targets, cut)

        demand_h = OrientedDemand.from_pairs([(hsub.lower(a), hsub.lower(b)) for a, b in demand.pairs()])
        net = build_network(h, state.cut, demand_h)
        flow = max_flow(net)
        logger.debug(
            "v0=%d cut=%d |F|=%d flow=%d", label(v0), state.cut_size, len(demand), flow.value
        )
        if options.trace:
            stages.append(
                {"stage": "flow", "cut_size": state.cut_size, "demand": len(demand), "flow": flow.value}
            )
        if flow.value == len(demand):
            break

        improved = improve_cut_from_mincut(h, state.cut, demand_h.pairs(), flow.original_sides(net))
        state.record("mincut", improved)
        repair_cut_connectivity(h, state.cut, state)
        restarts += 1
        if state.improvements > h.m:
            raise InternalInvariantViolation(
                f"{state.improvements} cut improvements exceed |E(H)| = {h.m}", stage="cut"
            )

    flow = cancel_opposite_arcs(flow, net)
    paths = [[hsub.lift(u) for u in internal_nodes(p, net)] for p in decompose_paths(flow, net)]
    omega = apply_path_modifications(omega, cut, paths)
    _check_conservation(g, cut, targets, demand, omega)
    omega = finalize_F_increment(omega, demand)
    _check_final(g, v0, targets, omega)

    if options.trace:
        stages.extend(_trace_details(g, v0, mu, targets, demand, paths, label))
    return ComponentRun(
        graph=g,
        weighting=omega,
        colors=dict(targets.f),
        v0=v0,
        S=sorted(cut.S),
        T=sorted(cut.T),
        cut_history=list(state.history),
        demand_size=len(demand),
        flow_value=flow.value,
        path_count=len(paths),
        restarts=restarts,
        stages=stages,
    )


def _trace_details(
    g: Graph,
    v0: int,
    mu: EdgeWeighting,
    targets: TargetAssignment,
    demand: OrientedDemand,
    paths: List[List[int]],
    label: Callable[[int], int],
) -> List[Dict[str, Any]]:
    details: List[Dict[str, Any]] = [
        {
            "stage": "parity",
            "mu": [[label(u), label(v), w] for (u, v), w in sorted(mu.weights.items()) if w != 2],
        },
        {
            "stage": "targets",
            "k": {label(v): k for v, k in targets.k.items() if k},
            "g": {label(v): value for v, value in targets.g.items()},
        },
    ]
    if g.degree(v0) > 1:
        star = induced_subgraph(g, (v0, *g.neighbors(v0)))
        instance = StarInstance(
            star.graph, star.lower(v0), {i: targets.g[v] for i, v in enumerate(star.to_parent)}
        )
        details.append({"stage": "star", "case": select_case(instance).value})
    details.append({"stage": "demand", "sigma": [[label(a), label(b)] for a, b in demand.pairs()]})
    details.append({"stage": "paths", "paths": [[label(v) for v in p] for p in paths]})
    return details


def weight_graph(g: Graph, options: WeightingOptions = WeightingOptions()) -> Certificate:
    """
    Weight every component independently and certify the merged weighting
    with the independent verifier. Raises K2Component before any work.
    """
    infos = validate(g)
    weights: Dict[Tuple[int, int], int] = {}
    colors = [0] * g.n
    traces: List[ComponentTrace] = []

    for info in infos:
        if info.kind is ComponentKind.ISOLATED:
            traces.append(ComponentTrace(vertices=list(info.vertices), kind=info.kind.value))
            continue
        sub = induced_subgraph(g, info.vertices)
        run = weight_component(sub.graph, options, label=sub.lift)
        for e, w in run.weighting.weights.items():
            weights[sub.lift_edge(e)] = w
        for v, color in run.colors.items():
            colors[sub.lift(v)] = color
        traces.append(
            ComponentTrace(
                vertices=list(info.vertices),
                kind=info.kind.value,
                v0=sub.lift(run.v0),
                S=sorted(sub.lift(v) for v in run.S),
                T=sorted(sub.lift(v) for v in run.T),
                cut_history=[CutStep(kind=kind, size=size) for kind, size in run.cut_history],
                demand_size=run.demand_size,
                flow_value=run.flow_value,
                path_count=run.path_count,
                restarts=run.restarts,
                stages=run.stages if options.trace else None,
            )
        )

    verdict = verify_weighting(g, weights)
    if not verdict.ok:
        logger.error("verifier rejected the weighting: conflicts %s", verdict.conflicts)
    return Certificate(
        tool_version=__version__,
        seed=options.seed,
        graph=GraphEcho.of(g),
        weights=[WeightEntry(u=u, v=v, weight=w) for (u, v), w in sorted(weights.items())],
        vertices=[
            VertexEntry(vertex=v, weighted_degree=verdict.degrees[v], color=colors[v])
            for v in g.vertices()
        ],
        components=traces,
        verdict=VerdictModel(ok=verdict.ok, conflicts=[list(e) for e in verdict.conflicts]),
    )
