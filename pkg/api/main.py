from __future__ import annotations

from datetime import datetime

from fastapi import FastAPI

from edge_weighting import __version__

from .context import system, startup_time
from .models.schemas import HealthResponse
from .routes import generate, oracle, verify, weight

app = FastAPI(
    title="Edge Weighting API",
    version=__version__,
    description="HTTP layer on top of the vertex-coloring edge-weighting engine.",
)


@app.get("/health", response_model=HealthResponse)
async def health() -> HealthResponse:
    """
    Return system status and uptime, plus the engine settings in effect.
    """
    now = datetime.utcnow()
    uptime = (now - startup_time).total_seconds()

    return HealthResponse(
        status="ok",
        uptime_seconds=uptime,
        version=__version__,
        exact_cut_threshold=system.exact_cut_threshold,
    )


# Include routers from routes package
app.include_router(weight.router, prefix="", tags=["weight"])
app.include_router(verify.router, prefix="", tags=["verify"])
app.include_router(oracle.router, prefix="", tags=["oracle"])
app.include_router(generate.router, prefix="", tags=["generate"])
