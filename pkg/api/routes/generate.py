# api/routes/generate.py
from __future__ import annotations

from typing import List, Optional

from fastapi import APIRouter, Query

from api.context import http_error, system
from api.models.schemas import GraphResponse
from core.errors import WeightingError
from graphs.io import format_graph
from weighting.certificate import GraphEcho

router = APIRouter()


@router.get("/generate/{family}", response_model=GraphResponse)
async def generate_graph(
    family: str,
    params: List[str] = Query([], description="Family parameters, e.g. params=12&params=0.5 for gnp"),
    seed: Optional[int] = Query(None),
) -> GraphResponse:
    try:
        g = system.generate(family, params, seed)
    except WeightingError as exc:
        raise http_error(exc)

    return GraphResponse(
        family=family,
        seed=system.seed if seed is None else seed,
        graph=GraphEcho.of(g),
        text=format_graph(g),
    )
