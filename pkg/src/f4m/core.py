"""Domain types and set-level scalarization metrics for few-for-many optimization.

A few-for-many (F4M) instance asks for a small set of solutions that
collectively cover many objectives: each objective is scored by the best set
member, and the set is scored by aggregating those per-objective minima.
This module holds the value types shared across the toolkit and the metrics
that define set quality (sum-of-minimum, set-level Tchebycheff, and the
point-level Tchebycheff scalarizer used by the benchmark transform).

All types are immutable once constructed and all operations are pure
functions, so everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DecisionVector",
    "ObjectiveVector",
    "EvaluatedSolution",
    "SolutionSet",
    "GtchParams",
    "set_objective_vector",
    "gws",
    "gtch_set",
    "tch_scalarize",
]

WEIGHT_SUM_TOL = 1e-12


def _as_float_tuple(values: Iterable[float]) -> tuple[float, ...]:
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class DecisionVector:
    """A point in decision space (length d, bounds owned by the problem)."""

    values: tuple[float, ...]

    def __init__(self, values: Iterable[float]):
        object.__setattr__(self, "values", _as_float_tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class ObjectiveVector:
    """An image in objective space (length m); all components must be finite."""

    values: tuple[float, ...]

    def __init__(self, values: Iterable[float]):
        vals = _as_float_tuple(values)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("objective values must be finite")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class EvaluatedSolution:
    """A decision vector paired with its cached objective vector."""

    decision: DecisionVector
    objectives: ObjectiveVector


class SolutionSet:
    """An ordered collection of evaluated solutions.

    Insertion order is preserved so that lowest-index tie-breaking in the
    algorithms is deterministic and documented.
    """

    __slots__ = ("members",)

    def __init__(self, members: Iterable[EvaluatedSolution]):
        self.members: tuple[EvaluatedSolution, ...] = tuple(members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, SolutionSet) and self.members == other.members

    def __repr__(self) -> str:
        return f"SolutionSet({len(self.members)} members)"

    def objectives_array(self) -> np.ndarray:
        """Objective values as a (n_members, m) array."""
        _check_consistent(self)
        return np.asarray([s.objectives.values for s in self.members], dtype=np.float64)

    def decisions_array(self) -> np.ndarray:
        return np.asarray([s.decision.values for s in self.members], dtype=np.float64)

    @staticmethod
    def from_objectives(rows: Iterable[Sequence[float]]) -> "SolutionSet":
        """Build a set from bare objective rows (empty decision vectors).

        Convenient for metric-level tests and for populations loaded from
        files where only objective values matter.
        """
        return SolutionSet(
            EvaluatedSolution(DecisionVector(()), ObjectiveVector(row)) for row in rows
        )

    @staticmethod
    def from_arrays(decisions: np.ndarray, objectives: np.ndarray) -> "SolutionSet":
        if len(decisions) != len(objectives):
            raise ValueError("decision/objective row counts differ")
        return SolutionSet(
            EvaluatedSolution(DecisionVector(x), ObjectiveVector(f))
            for x, f in zip(decisions, objectives)
        )


@dataclass(frozen=True)
class GtchParams:
    """Weights and utopian point for the set-level Tchebycheff metric."""

    lam: tuple[float, ...]
    z_star: ObjectiveVector

    def __init__(self, lam: Iterable[float], z_star: ObjectiveVector | Iterable[float]):
        lam = _as_float_tuple(lam)
        if any(l <= 0.0 for l in lam):
            raise ValueError("all lambda weights must be > 0")
        if not isinstance(z_star, ObjectiveVector):
            z_star = ObjectiveVector(z_star)
        if len(lam) != len(z_star):
            raise ValueError("lambda and z_star dimensions differ")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "z_star", z_star)


def _check_consistent(sset: SolutionSet) -> int:
    if len(sset) == 0:
        raise ValueError("empty solution set")
    m = len(sset.members[0].objectives)
    for s in sset.members:
        if len(s.objectives) != m:
            raise ValueError("inconsistent objective dimension")
    return m


def set_objective_vector(sset: SolutionSet) -> ObjectiveVector:
    """Per-objective minima across the set: the set's collective profile."""
    m = _check_consistent(sset)
    mins = list(sset.members[0].objectives.values)
    for s in sset.members[1:]:
        vals = s.objectives.values
        for i in range(m):
            if vals[i] < mins[i]:
                mins[i] = vals[i]
    return ObjectiveVector(mins)


def gws(sset: SolutionSet) -> float:
    """Sum-of-minimum set objective: sum over objectives of the best member value.

    Exactly equals ``sum(set_objective_vector(sset))`` by construction.
    """
    v = set_objective_vector(sset)
    total = 0.0
    for val in v.values:
        total += val
    return total


def gtch_set(sset: SolutionSet, params: GtchParams) -> float:
    """Set-level weighted Tchebycheff: max_i lam_i * (min_j f_i(x_j) - z*_i).

    Uses the signed difference (no absolute value), so a set that beats the
    utopian point on every objective scores negative.
    """
    v = set_objective_vector(sset)
    if len(params.lam) != len(v):
        raise ValueError("params dimension does not match objective dimension")
    zs = params.z_star.values
    best = -math.inf
    for i, vi in enumerate(v.values):
        t = params.lam[i] * (vi - zs[i])
        if t > best:
            best = t
    return best


def tch_scalarize(
    f: ObjectiveVector | Sequence[float],
    w: Sequence[float],
    z_star: ObjectiveVector | Sequence[float],
) -> float:
    """Point-level Tchebycheff scalarization: max_i w_i * |f_i - z*_i|.

    Weights must be nonnegative and sum to 1 (within 1e-12).
    """
    fv = f.values if isinstance(f, ObjectiveVector) else _as_float_tuple(f)
    zv = z_star.values if isinstance(z_star, ObjectiveVector) else _as_float_tuple(z_star)
    wv = _as_float_tuple(w)
    if not (len(fv) == len(wv) == len(zv)):
        raise ValueError("dimension mismatch between f, w, z_star")
    if any(wi < 0.0 for wi in wv):
        raise ValueError("negative weight")
    if abs(sum(wv) - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError("weights must sum to 1")
    best = 0.0
    for i in range(len(fv)):
        t = wv[i] * abs(fv[i] - zv[i])
        if t > best:
            best = t
    return best
