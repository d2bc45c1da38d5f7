"""
Recoloring a closed star.

Given a graph whose center v0 is adjacent to every other vertex and pre-colors
g that already differ on every edge avoiding v0, find h: E -> {0,1,2} with

  (i)   h(e) in {0,1} on edges avoiding v0 whose g-endpoint sum is even,
  (ii)  h(e) = 0 on edges avoiding v0 whose g-endpoint sum is odd,
  (iii) s_h(v) in {0,2} for every v != v0,
  (iv)  f_h(v) = g(v) + s_h(v) is a proper coloring.

The construction is a case analysis over the vertices whose g-value has the
parity of g(v0), sorted by (g, id).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping

from core.errors import PreconditionViolated
from graphs.graph import Edge, Graph, edge_key


class StarCase(str, Enum):
    ALL_DISTINCT = "AllDistinct"
    SINGLE_V1 = "SingleV1"
    HJ_SMALL_I = "Hj_small_i"
    HJ_LARGE_I = "Hj_large_i"
    X_EQ_M_EVEN = "XeqMprime_even"
    X_EQ_M_ODD_NOEDGE = "XeqMprime_odd_noedge"
    X_EQ_M_ODD_TRIANGLE = "XeqMprime_odd_triangle"


@dataclass(frozen=True)
class StarInstance:
    graph: Graph
    v0: int
    g: Mapping[int, int]

    def validate(self) -> None:
        graph, v0 = self.graph, self.v0
        if graph.n < 3:
            raise PreconditionViolated(f"star needs at least 3 vertices, got {graph.n}")
        if graph.degree(v0) != graph.n - 1:
            raise PreconditionViolated(f"center {v0} is not adjacent to every other vertex")
        if set(self.g) != set(graph.vertices()):
            raise PreconditionViolated("pre-colors must be given for every vertex")
        if any(value < 0 for value in self.g.values()):
            raise PreconditionViolated("pre-colors must be nonnegative")
        for u, v in graph.edges:
            if v0 not in (u, v) and self.g[u] == self.g[v]:
                raise PreconditionViolated(f"pre-colors conflict on edge {{{u},{v}}}")


@dataclass
class HFunction:
    h: Dict[Edge, int]
    f: Dict[int, int]
    case: StarCase
    s_h: Dict[int, int] = field(default_factory=dict)

    def value(self, e: Edge) -> int:
        return self.h.get(e, 0)


@dataclass(frozen=True)
class _CasePlan:
    case: StarCase
    ordered: List[int]  # V' sorted by (g, id); ordered[i - 1] is v_i
    x: int = 0
    i_prime: int = 0


def _plan(inst: StarInstance) -> _CasePlan:
    g, v0 = inst.g, inst.v0
    others = [v for v in inst.graph.vertices() if v != v0]
    if all(g[v] != g[v0] for v in others):
        return _CasePlan(StarCase.ALL_DISTINCT, [])

    ordered = sorted((v for v in others if (g[v] - g[v0]) % 2 == 0), key=lambda v: (g[v], v))
    m_prime = len(ordered)
    if m_prime == 1:
        return _CasePlan(StarCase.SINGLE_V1, ordered)

    values = [g[v] for v in ordered]
    present = set(values)
    x = 1
    while g[v0] + 2 * x in present:
        x += 1
    i_prime = bisect_left(values, g[v0] + 2 * x)

    if i_prime <= m_prime - x:
        case = StarCase.HJ_SMALL_I
    elif x < m_prime:
        case = StarCase.HJ_LARGE_I
    elif m_prime % 2 == 0:
        case = StarCase.X_EQ_M_EVEN
    else:
        z = (m_prime + 3) // 2
        if inst.graph.has_edge(ordered[z - 2], ordered[z - 1]):
            case = StarCase.X_EQ_M_ODD_TRIANGLE
        else:
            case = StarCase.X_EQ_M_ODD_NOEDGE
    return _CasePlan(case, ordered, x, i_prime)


def select_case(inst: StarInstance) -> StarCase:
    return _plan(inst).case


def compute_h(inst: StarInstance) -> HFunction:
    inst.validate()
    plan = _plan(inst)
    g, v0, ordered = inst.g, inst.v0, plan.ordered
    m_prime = len(ordered)
    h: Dict[Edge, int] = {}

    def spoke(i: int) -> Edge:
        return edge_key(v0, ordered[i - 1])

    def apply_hj(j: int) -> None:
        for i in range(j + 1, m_prime + 1):
            h[spoke(i)] = 2

    if plan.case is StarCase.SINGLE_V1:
        outside = [v for v in inst.graph.vertices() if v != v0 and v not in ordered]
        u = max(outside, key=lambda v: (g[v], -v))
        h[edge_key(v0, u)] = 2
    elif plan.case is StarCase.HJ_SMALL_I:
        apply_hj(m_prime - plan.x)
    elif plan.case is StarCase.HJ_LARGE_I:
        apply_hj(m_prime - plan.x - 1)
    elif plan.case in (
        StarCase.X_EQ_M_EVEN,
        StarCase.X_EQ_M_ODD_NOEDGE,
        StarCase.X_EQ_M_ODD_TRIANGLE,
    ):
        expected = [g[v0] + 2 * i for i in range(m_prime)]
        if [g[v] for v in ordered] != expected:
            raise PreconditionViolated(
                f"values {[g[v] for v in ordered]} are not the run {expected}", stage="star"
            )
        if plan.case is StarCase.X_EQ_M_EVEN:
            apply_hj(m_prime // 2)
        else:
            z = (m_prime + 3) // 2
            for i in range(z + 1, m_prime + 1):
                h[spoke(i)] = 2
            if plan.case is StarCase.X_EQ_M_ODD_NOEDGE:
                h[spoke(z - 1)] = 2
            else:
                h[spoke(z - 1)] = 1
                h[spoke(z)] = 1
                h[edge_key(ordered[z - 2], ordered[z - 1])] = 1

    s_h = {v: 0 for v in inst.graph.vertices()}
    for (u, v), value in h.items():
        s_h[u] += value
        s_h[v] += value
    f = {v: g[v] + s_h[v] for v in inst.graph.vertices()}
    return HFunction(h, f, plan.case, s_h)


def check_h_properties(inst: StarInstance, hf: HFunction) -> List[str]:
    """Names of violated properties (i)-(iv); empty when h is valid."""
    violations: List[str] = []
    g, v0 = inst.g, inst.v0
    if any(e not in inst.graph.edges for e in hf.h):
        violations.append("domain: h is defined on a non-edge")
    for e in inst.graph.edges:
        value = hf.value(e)
        if value not in (0, 1, 2):
            violations.append(f"codomain: h{e} = {value}")
        if v0 in e:
            continue
        even = (g[e[0]] + g[e[1]]) % 2 == 0
        if even and value not in (0, 1):
            violations.append(f"(i): h{e} = {value} on an even edge")
        if not even and value != 0:
            violations.append(f"(ii): h{e} = {value} on an odd edge")
    s_h = {v: sum(hf.value(edge_key(v, w)) for w in inst.graph.neighbors(v)) for v in inst.graph.vertices()}
    for v in inst.graph.vertices():
        if v != v0 and s_h[v] not in (0, 2):
            violations.append(f"(iii): s_h({v}) = {s_h[v]}")
    for u, v in inst.graph.edges:
        if g[u] + s_h[u] == g[v] + s_h[v]:
            violations.append(f"(iv): f_h({u}) = f_h({v}) = {g[u] + s_h[u]}")
    return violations
