# api/models/schemas.py
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field

from weighting.certificate import GraphEcho


class HealthResponse(BaseModel):
    status: str
    uptime_seconds: float
    version: str
    exact_cut_threshold: int


class WeightEntryIn(BaseModel):
    u: int = Field(..., ge=0)
    v: int = Field(..., ge=0)
    weight: int


class VerifyRequest(BaseModel):
    graph: GraphEcho
    weights: List[WeightEntryIn]


class VerdictResponse(BaseModel):
    ok: bool
    conflicts: List[List[int]]
    weighted_degrees: List[int]


class MinKRequest(BaseModel):
    graph: GraphEcho
    max_k: int = Field(4, ge=1)
    budget: Optional[int] = Field(None, ge=1)
    samples: Optional[int] = Field(None, ge=1)   # sampled upper bound past the budget


class MinKResponse(BaseModel):
    k: Optional[int]   # None when no k <= max_k works
    max_k: int
    witness: List[WeightEntryIn] = []
    exact: bool = True


class GraphResponse(BaseModel):
    family: str
    seed: int
    graph: GraphEcho
    text: str
