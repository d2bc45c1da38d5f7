# api/routes/weight.py
from __future__ import annotations

from typing import Optional

from fastapi import APIRouter, File, HTTPException, Query, UploadFile

from api.context import http_error, system
from core.errors import WeightingError
from graphs.io import parse_graph
from weighting.certificate import Certificate

router = APIRouter()


@router.post("/weight", response_model=Certificate, response_model_exclude_none=True)
async def weight(
    graph: UploadFile = File(...),
    seed: Optional[int] = Query(None),
    exact_cut: bool = Query(False),
    trace: bool = Query(False),
    graph_format: str = Query("auto", pattern="^(auto|edgelist|dimacs)$"),
) -> Certificate:
    content = await graph.read()
    try:
        text = content.decode("utf-8")
    except UnicodeDecodeError:
        raise HTTPException(status_code=400, detail="Graph file must be UTF-8 text")

    try:
        g = parse_graph(text, graph_format)
        cert = system.weight(g, seed=seed, exact_cut=exact_cut, trace=trace)
    except WeightingError as exc:
        raise http_error(exc)

    if not cert.verdict.ok:
        raise HTTPException(status_code=500, detail=f"Verifier rejected the weighting: {cert.verdict.conflicts}")
    return cert
