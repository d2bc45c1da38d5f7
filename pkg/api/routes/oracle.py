# api/routes/oracle.py
from __future__ import annotations

from fastapi import APIRouter

from api.context import http_error, system
from api.models.schemas import MinKRequest, MinKResponse, WeightEntryIn
from core.errors import BudgetExceeded, WeightingError

router = APIRouter()


@router.post("/mink", response_model=MinKResponse)
async def mink(request: MinKRequest) -> MinKResponse:
    try:
        g = request.graph.to_graph()
        try:
            result = system.min_k(g, request.max_k, request.budget)
        except BudgetExceeded:
            if request.samples is None:
                raise
            result = system.sample(g, request.max_k, request.samples)
    except WeightingError as exc:
        raise http_error(exc)

    return MinKResponse(
        k=result.k,
        max_k=result.k_max,
        exact=result.exact,
        witness=[WeightEntryIn(u=u, v=v, weight=w) for (u, v), w in sorted(result.witness.items())],
    )
