"""SoM-EMOA: the (mu+1) evolutionary algorithm for few-for-many optimization.

Public surface: :func:`run_som_emoa` with :class:`RunConfig`, the array-level
operators in :mod:`~f4m.algorithm.ops` (SBX, polynomial mutation, the removal
step and its naive oracle), typed :class:`Archive` / :class:`PopulationState`
state snapshots, and engine selection helpers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import SolutionSet
from .backend import available_backends, default_backend_name, get_backend
from .descriptor import EvalDescriptor
from .engine import RunConfig, RunResult, run_som_emoa
from .ops import (
    archive_init_arrays,
    archive_update_arrays,
    categorical_index,
    fast_removal,
    mating_probabilities,
    naive_removal,
    pick_index,
    poly_mutation,
    sbx_crossover,
    sbx_pair,
    seq_sum,
)

__all__ = [
    "Archive",
    "PopulationState",
    "RunConfig",
    "RunResult",
    "run_som_emoa",
    "archive_init",
    "archive_update",
    "mating_selection",
    "sbx_crossover",
    "sbx_pair",
    "poly_mutation",
    "fast_removal",
    "naive_removal",
    "mating_probabilities",
    "categorical_index",
    "pick_index",
    "seq_sum",
    "archive_init_arrays",
    "archive_update_arrays",
    "EvalDescriptor",
    "get_backend",
    "available_backends",
    "default_backend_name",
]


@dataclass
class Archive:
    """m slots, slot i holding the best solution seen so far on objective i,
    plus the per-objective best-value vector u (u[i] == slot_f[i, i])."""

    slot_x: np.ndarray  # (m, d)
    slot_f: np.ndarray  # (m, m)
    u: np.ndarray  # (m,)

    def check(self) -> None:
        m = len(self.u)
        for i in range(m):
            if self.slot_f[i, i] != self.u[i]:
                raise AssertionError(f"archive slot {i} out of sync with u")


@dataclass
class PopulationState:
    """The k-member population and its cached per-objective minima v."""

    x: np.ndarray  # (k, d)
    f: np.ndarray  # (k, m)
    v: np.ndarray  # (m,)

    @property
    def k(self) -> int:
        return len(self.f)

    def check(self) -> None:
        if not np.array_equal(self.v, self.f.min(axis=0)):
            raise AssertionError("population minima v out of sync with members")


def archive_init(sample: SolutionSet) -> Archive:
    """Seed the archive with the per-objective argmin over the sample
    (ties to the lowest sample index)."""
    if len(sample) == 0:
        raise ValueError("empty sample")
    sx = sample.decisions_array()
    sf = sample.objectives_array()
    ax, af, u = archive_init_arrays(sx, sf)
    return Archive(ax, af, u)


def archive_update(archive: Archive, off_x, off_f) -> None:
    """Replace slot i (in place) iff the offspring strictly improves
    objective i; u stays the component-wise minimum of everything seen."""
    archive_update_arrays(
        archive.slot_x, archive.slot_f, archive.u,
        np.asarray(off_x, dtype=np.float64), np.asarray(off_f, dtype=np.float64),
    )


def mating_selection(
    pop: PopulationState,
    archive: Archive,
    rng,
    use_archive: bool = True,
    use_probability_p: bool = True,
):
    """Pick parent 1 uniformly from the population and parent 2 from the
    archive slot of an objective drawn from p = (v - u) / ||v - u||_1.

    Returns (parent1_x, parent2_x).  The ablation flags switch parent 2 to a
    uniform archive slot or a second uniform population draw.
    """
    us = rng.random(2)
    p1 = pop.x[pick_index(us[0], pop.k)]
    if not use_archive:
        return p1, pop.x[pick_index(us[1], pop.k)]
    if use_probability_p:
        p = mating_probabilities(pop.v, archive.u)
    else:
        m = len(archive.u)
        p = np.full(m, 1.0 / m)
    return p1, archive.slot_x[categorical_index(p, us[1])]
