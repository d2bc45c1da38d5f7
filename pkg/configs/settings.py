from __future__ import annotations

import os

DEFAULT_SEED = int(os.getenv("EDGE_WEIGHTING_SEED", "0"))
EXACT_CUT_THRESHOLD = int(os.getenv("EXACT_CUT_THRESHOLD", "20"))
ORACLE_BUDGET = int(os.getenv("ORACLE_BUDGET", str(10**8)))
WORKERS = int(os.getenv("WORKERS", "1"))
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")


def get_engine_kwargs() -> dict:
    """
    Keyword arguments for WeightingSystem built from the environment.
    CLI flags and API query parameters override these per call.
    """
    return {
        "seed": DEFAULT_SEED,
        "exact_cut_threshold": EXACT_CUT_THRESHOLD,
        "oracle_budget": ORACLE_BUDGET,
        "workers": WORKERS,
    }
