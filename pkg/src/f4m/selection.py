"""Greedy few-for-many subset selection and a random-search baseline.

Greedy selection distills k solutions out of an arbitrary population by
repeatedly adding the candidate whose inclusion minimizes the set's
sum-of-minimum.  The marginal score is computed incrementally from the
running per-objective minima (O(m) per candidate); ties break to the lowest
population index.
"""

from __future__ import annotations

import numpy as np

from .algorithm.backend import get_backend
from .algorithm.descriptor import EvalDescriptor
from .core import SolutionSet

__all__ = ["greedy_subset", "greedy_subset_indices", "random_search_baseline"]


def greedy_subset_indices(objectives: np.ndarray, k: int) -> list[int]:
    """Indices of the greedy k-subset of the rows of ``objectives``."""
    objectives = np.asarray(objectives, dtype=np.float64)
    n = len(objectives)
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= population size, got k={k}, n={n}")
    chosen: list[int] = []
    remaining = np.ones(n, dtype=bool)
    cur_v: np.ndarray | None = None
    for _ in range(k):
        if cur_v is None:
            scores = objectives.sum(axis=1)
        else:
            scores = np.minimum(objectives, cur_v).sum(axis=1)
        scores[~remaining] = np.inf
        pick = int(np.argmin(scores))  # argmin takes the first, lowest index
        chosen.append(pick)
        remaining[pick] = False
        cur_v = objectives[pick].copy() if cur_v is None else np.minimum(cur_v, objectives[pick])
    return chosen


def greedy_subset(pop: SolutionSet, k: int) -> SolutionSet:
    """Greedy k-subset of ``pop`` by marginal sum-of-minimum."""
    if len(pop) == 0:
        raise ValueError("empty population")
    idx = greedy_subset_indices(pop.objectives_array(), k)
    return SolutionSet(pop.members[i] for i in idx)


def random_search_baseline(problem, eval_budget: int, k: int, seed: int,
                           backend=None) -> SolutionSet:
    """Evaluate ``eval_budget`` uniform random points and return the greedy
    k-subset.  Deterministic given the seed."""
    if eval_budget < k:
        raise ValueError("eval_budget must be >= k")
    desc = EvalDescriptor(problem)
    be = get_backend(backend)
    rng = np.random.default_rng(seed)
    xs = desc.lo + rng.random((eval_budget, desc.d)) * (desc.hi - desc.lo)
    fs = be.evaluate_batch(desc, xs)
    idx = greedy_subset_indices(fs, k)
    return SolutionSet.from_arrays(xs[idx], fs[idx])
