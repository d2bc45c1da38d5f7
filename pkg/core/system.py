from __future__ import annotations

from typing import List, Mapping, Optional, Sequence

from configs.settings import get_engine_kwargs
from core.experiments import ExperimentReport, run_batch, run_sweep
from graphs.generators import generate
from graphs.graph import Edge, Graph
from verification.oracle import MinKResult, SampleBound, brute_force_min_k, sample_min_k
from verification.verifier import Verdict, verify_weighting
from weighting.algorithm import WeightingOptions, weight_graph
from weighting.certificate import Certificate


class WeightingSystem:
    def __init__(
        self,
        seed: int = 0,
        exact_cut_threshold: int = 20,
        oracle_budget: int = 10**8,
        workers: int = 1,
    ) -> None:
        self.seed = seed
        self.exact_cut_threshold = exact_cut_threshold
        self.oracle_budget = oracle_budget
        self.workers = workers

    @classmethod
    def from_env(cls) -> "WeightingSystem":
        return cls(**get_engine_kwargs())

    def options(
        self,
        seed: Optional[int] = None,
        exact_cut: bool = False,
        exact_cut_threshold: Optional[int] = None,
        trace: bool = False,
    ) -> WeightingOptions:
        return WeightingOptions(
            seed=self.seed if seed is None else seed,
            exact_cut=exact_cut,
            exact_cut_threshold=self.exact_cut_threshold if exact_cut_threshold is None else exact_cut_threshold,
            trace=trace,
        )

    def weight(self, g: Graph, **flags) -> Certificate:
        return weight_graph(g, self.options(**flags))

    def verify(self, g: Graph, weights: Mapping[Edge, int]) -> Verdict:
        return verify_weighting(g, weights)

    def min_k(self, g: Graph, k_max: int = 4, budget: Optional[int] = None) -> MinKResult:
        return brute_force_min_k(
            g, k_max, self.oracle_budget if budget is None else budget, workers=self.workers
        )

    def sample(self, g: Graph, k_max: int = 4, samples: int = 10_000) -> SampleBound:
        return sample_min_k(g, k_max, samples, seed=self.seed)

    def generate(self, family: str, params: List[str], seed: Optional[int] = None) -> Graph:
        return generate(family, params, self.seed if seed is None else seed)

    def sweep(self, n_max: int, **flags) -> ExperimentReport:
        return run_sweep(n_max, workers=self.workers, options=self.options(**flags))

    def batch(
        self,
        samples: int,
        sizes: Sequence[int],
        probabilities: Sequence[float],
        check_two: bool = False,
        **flags,
    ) -> ExperimentReport:
        options = self.options(**flags)
        return run_batch(
            samples,
            sizes,
            probabilities,
            seed=options.seed,
            workers=self.workers,
            options=options,
            check_two=check_two,
        )
