"""
Error hierarchy for the edge-weighting engine.

Every error carries the exit code the command-line surface reports for it.
Errors deriving from InternalInvariantViolation can only be raised by a bug:
the constructions they guard are guaranteed to succeed.
"""

from __future__ import annotations

from typing import Optional


class WeightingError(Exception):
    exit_code = 5


class InvalidGraph(WeightingError, ValueError):
    exit_code = 3


class GraphParseError(WeightingError, ValueError):
    exit_code = 3

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class DomainMismatch(WeightingError, ValueError):
    exit_code = 3

    def __init__(self, missing=(), extra=()) -> None:
        self.missing = sorted(missing)
        self.extra = sorted(extra)
        parts = []
        if self.missing:
            parts.append(f"missing weights for {_edges_str(self.missing)}")
        if self.extra:
            parts.append(f"weights for non-edges {_edges_str(self.extra)}")
        super().__init__("; ".join(parts) or "weighting domain differs from edge set")


class InvalidGeneratorParameters(WeightingError, ValueError):
    exit_code = 3


class K2Component(WeightingError):
    """No vertex-coloring edge-weighting exists for a graph with this component."""

    exit_code = 2

    def __init__(self, u: int, v: int) -> None:
        self.u, self.v = min(u, v), max(u, v)
        super().__init__(f"K2 component {{{self.u},{self.v}}}")


class TooLarge(WeightingError):
    exit_code = 4

    def __init__(self, vertices: int, threshold: int) -> None:
        self.vertices = vertices
        self.threshold = threshold
        super().__init__(
            f"exact maximum cut refused: {vertices} vertices exceeds threshold {threshold}"
        )


class BudgetExceeded(WeightingError):
    exit_code = 4

    def __init__(self, k: int, edges: int, bound: int, budget: int) -> None:
        self.k = k
        self.edges = edges
        self.bound = bound
        self.budget = budget
        super().__init__(
            f"enumeration bound {k}^{edges} = {bound} exceeds budget {budget}"
        )


class InternalInvariantViolation(WeightingError):
    exit_code = 5
    default_stage = "pipeline"

    def __init__(self, message: str, stage: Optional[str] = None) -> None:
        self.stage = stage or self.default_stage
        super().__init__(f"[{self.stage}] {message}")


class CutGraphDisconnected(InternalInvariantViolation):
    default_stage = "parity"


class NotImproving(InternalInvariantViolation):
    default_stage = "cut"


class DemandNotSameSide(InternalInvariantViolation):
    default_stage = "flow"


class DecompositionShortfall(InternalInvariantViolation):
    default_stage = "flow"


class PreconditionViolated(InternalInvariantViolation):
    default_stage = "star"


class InsufficientNeighbors(InternalInvariantViolation):
    default_stage = "demand"


class WeightOutOfRange(InternalInvariantViolation):
    default_stage = "paths"


def _edges_str(edges) -> str:
    return ", ".join(f"{{{u},{v}}}" for u, v in edges)
