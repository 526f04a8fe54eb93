"""The (mu+1) sum-of-minimum evolutionary run driver.

One run: sample N random solutions (N evaluations), seed the per-objective
archive from them, pick k random sample members as the population, then loop
{mating selection -> SBX -> polynomial mutation -> evaluate -> archive update
-> removal} until the evaluation budget is spent.  Fully deterministic given
the seed; the generation work is delegated to the selected engine in blocks
between trace points.

Initialization draw order (before the per-generation order documented in
``ops``): N*d uniforms for the sample (row by row), then k uniforms for a
partial Fisher-Yates draw of the initial population indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..core import SolutionSet
from .backend import get_backend
from .descriptor import EvalDescriptor
from .ops import seq_sum

__all__ = ["RunConfig", "RunResult", "run_som_emoa"]

TraceSink = Callable[[int, float], None]


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one SoM-EMOA run.

    ``p_m = None`` resolves to 1/d for the problem at hand.  The ablation
    flags select the no-archive and no-probability variants.
    """

    k: int
    eval_budget: int = 60_000
    init_sample_n: int = 600
    eta_c: float = 20.0
    eta_m: float = 20.0
    p_c: float = 1.0
    p_m: float | None = None
    seed: int = 0
    use_archive: bool = True
    use_probability_p: bool = True
    log_every: int = 600
    debug: bool = False

    def validated(self) -> "RunConfig":
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.init_sample_n < self.k:
            raise ValueError("init_sample_n must be >= k")
        if self.eval_budget < self.init_sample_n:
            raise ValueError("eval_budget must cover the initial sample")
        if not (0.0 <= self.p_c <= 1.0):
            raise ValueError("p_c must be in [0, 1]")
        if self.p_m is not None and not (0.0 <= self.p_m <= 1.0):
            raise ValueError("p_m must be in [0, 1]")
        if self.log_every < 1:
            raise ValueError("log_every must be >= 1")
        return self


@dataclass
class RunResult:
    final: SolutionSet
    trace: list[tuple[int, float]] = field(repr=False)
    debug_violations: int = 0

    def final_gws(self) -> float:
        return self.trace[-1][1]


def _initial_population_indices(rng, n: int, k: int) -> np.ndarray:
    """k distinct indices via partial Fisher-Yates, one uniform per slot."""
    idx = np.arange(n)
    for i in range(k):
        j = i + min(int(rng.random() * (n - i)), n - i - 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:k]


def run_som_emoa(
    problem,
    config: RunConfig,
    sink: TraceSink | None = None,
    backend=None,
) -> RunResult:
    """Execute one seeded run; returns the final population and the
    (evaluations, gws) trace, which is non-increasing in gws."""
    config = config.validated()
    be = get_backend(backend)
    desc = EvalDescriptor(problem)
    d, m, k = desc.d, desc.m, config.k
    n = config.init_sample_n
    p_m = config.p_m if config.p_m is not None else 1.0 / d

    rng = np.random.default_rng(config.seed)
    sample_x = desc.lo + rng.random((n, d)) * (desc.hi - desc.lo)
    sample_f = be.evaluate_batch(desc, sample_x)
    evals = n

    arch_idx = np.argmin(sample_f, axis=0)
    arch_x = np.ascontiguousarray(sample_x[arch_idx])
    arch_f = np.ascontiguousarray(sample_f[arch_idx])
    u = np.ascontiguousarray(sample_f[arch_idx, np.arange(m)])
    hist_min = sample_f.min(axis=0).copy() if config.debug else np.empty(0)

    pop_idx = _initial_population_indices(rng, n, k)
    pop_x = np.ascontiguousarray(sample_x[pop_idx])
    pop_f = np.ascontiguousarray(sample_f[pop_idx])
    v = pop_f.min(axis=0).copy()

    trace: list[tuple[int, float]] = []

    def log_point():
        point = (evals, seq_sum(v))
        if trace and trace[-1][0] == point[0]:
            return
        trace.append(point)
        if sink is not None:
            sink(*point)

    log_point()
    violations = 0
    while evals < config.eval_budget:
        next_log = (evals // config.log_every + 1) * config.log_every
        gens = min(next_log, config.eval_budget) - evals
        violations += be.run_generations(
            desc, pop_x, pop_f, v, arch_x, arch_f, u, hist_min, rng, gens,
            config.eta_c, config.eta_m, config.p_c, p_m,
            config.use_archive, config.use_probability_p, config.debug,
        )
        evals += gens
        log_point()

    final = SolutionSet.from_arrays(pop_x, pop_f)
    return RunResult(final=final, trace=trace, debug_violations=violations)
