# weighting/certificate.py
from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from graphs.graph import Cut, Edge, Graph, edge_key


class GraphEcho(BaseModel):
    n: int = Field(..., ge=0)
    edges: List[Tuple[int, int]]

    @classmethod
    def of(cls, g: Graph) -> "GraphEcho":
        return cls(n=g.n, edges=g.sorted_edges())

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


class WeightEntry(BaseModel):
    u: int
    v: int
    weight: int = Field(..., ge=1, le=4)


class VertexEntry(BaseModel):
    vertex: int
    weighted_degree: int
    color: int


class CutStep(BaseModel):
    kind: str
    size: int


class ComponentTrace(BaseModel):
    vertices: List[int]
    kind: str
    v0: Optional[int] = None
    S: List[int] = []
    T: List[int] = []
    cut_history: List[CutStep] = []
    demand_size: int = 0
    flow_value: int = 0
    path_count: int = 0
    restarts: int = 0
    stages: Optional[List[Dict[str, Any]]] = None

    def cut(self, g: Graph) -> Cut:
        return Cut.from_side(g, self.S, ground=set(self.S) | set(self.T))

    @property
    def cut_improvements(self) -> int:
        return max(len(self.cut_history) - 1, 0)


class VerdictModel(BaseModel):
    ok: bool
    conflicts: List[List[int]] = []


class Certificate(BaseModel):
    tool_version: str
    seed: int
    graph: GraphEcho
    weights: List[WeightEntry]
    vertices: List[VertexEntry]
    components: List[ComponentTrace]
    verdict: VerdictModel

    def weighting(self) -> Dict[Edge, int]:
        return {edge_key(w.u, w.v): w.weight for w in self.weights}

    def distinct_weights(self) -> List[int]:
        return sorted({w.weight for w in self.weights})


def render_text(cert: Certificate) -> str:
    """
    Comment header plus one "u v w" line per edge, so the document is
    itself a weight file for `verify`.
    """
    lines = [
        "# vertex-coloring edge-weighting certificate",
        f"# tool_version: {cert.tool_version}",
        f"# seed: {cert.seed}",
        f"# graph: n={cert.graph.n} m={len(cert.graph.edges)}",
        f"# verdict: {'ok' if cert.verdict.ok else 'FAILED'}",
    ]
    for u, v in cert.verdict.conflicts:
        lines.append(f"# conflict: {u} {v}")
    for index, comp in enumerate(cert.components):
        if comp.v0 is None:
            lines.append(f"# component {index}: {comp.kind} {comp.vertices}")
            continue
        history = " ".join(f"{step.kind}:{step.size}" for step in comp.cut_history)
        lines.append(
            f"# component {index}: v0={comp.v0} |F|={comp.demand_size} flow={comp.flow_value} "
            f"paths={comp.path_count} restarts={comp.restarts}"
        )
        lines.append(f"#   S={comp.S}")
        lines.append(f"#   T={comp.T}")
        lines.append(f"#   cut: {history}")
        for stage in comp.stages or []:
            detail = " ".join(f"{key}={value}" for key, value in stage.items() if key != "stage")
            lines.append(f"#   [{stage['stage']}] {detail}")
    for entry in cert.vertices:
        lines.append(f"# vertex {entry.vertex}: degree={entry.weighted_degree} color={entry.color}")
    lines.extend(f"{w.u} {w.v} {w.weight}" for w in cert.weights)
    return "\n".join(lines) + "\n"


def render_structured(cert: Certificate) -> str:
    return cert.model_dump_json(indent=2, exclude_none=True) + "\n"
