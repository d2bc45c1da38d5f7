from __future__ import annotations

from datetime import datetime

from dotenv import load_dotenv
from fastapi import HTTPException

from core.errors import BudgetExceeded, K2Component, TooLarge, WeightingError
from core.system import WeightingSystem

load_dotenv()

system = WeightingSystem.from_env()

startup_time = datetime.utcnow()


def http_error(exc: WeightingError) -> HTTPException:
    """Status code for an engine error: 422 K2, 413 budget, 500 internal, 400 bad input."""
    if isinstance(exc, K2Component):
        status = 422
    elif isinstance(exc, (BudgetExceeded, TooLarge)):
        status = 413
    elif exc.exit_code == 3:
        status = 400
    else:
        status = 500
    return HTTPException(status_code=status, detail=str(exc))
