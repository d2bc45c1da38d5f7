# api/routes/verify.py
from __future__ import annotations

from fastapi import APIRouter

from api.context import http_error, system
from api.models.schemas import VerdictResponse, VerifyRequest
from core.errors import WeightingError
from graphs.graph import edge_key

router = APIRouter()


@router.post("/verify", response_model=VerdictResponse)
async def verify(request: VerifyRequest) -> VerdictResponse:
    try:
        g = request.graph.to_graph()
        weights = {edge_key(w.u, w.v): w.weight for w in request.weights}
        verdict = system.verify(g, weights)
    except WeightingError as exc:
        raise http_error(exc)

    return VerdictResponse(
        ok=verdict.ok,
        conflicts=[list(e) for e in verdict.conflicts],
        weighted_degrees=verdict.degrees,
    )
