"""Weight-vector generation and serialization for the R2-based test suite.

Three generators:

* ``das_dennis``   -- simplex-lattice design: all compositions h/H on the
                     simplex, enumerated deterministically (first coordinate
                     descending).  Needs C(H+q-1, q-1) >= m.
* ``uniform_simplex`` -- seeded flat-Dirichlet samples (normalized exponential
                     draws), i.e. uniform on the probability simplex.  This is
                     the default scheme for the transformed benchmark
                     instances.
* ``equispaced_2d`` -- q = 2 only: w_i = ((i-1)/(m-1), 1-(i-1)/(m-1)).

Weight sets serialize to a plain-text matrix (one row per vector,
space-separated, 17 significant digits) so a run can be replayed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["WeightSet", "make_weights", "das_dennis_count", "save_weights", "load_weights"]

METHODS = ("das_dennis", "uniform_simplex", "equispaced_2d")


@dataclass(frozen=True)
class WeightSet:
    """m weight vectors of width q, each nonnegative and summing to 1."""

    vectors: np.ndarray  # (m, q), read-only
    method: str
    seed: int | None = None
    lattice_h: int | None = None

    def __post_init__(self):
        vecs = np.ascontiguousarray(np.asarray(self.vectors, dtype=np.float64))
        if vecs.ndim != 2:
            raise ValueError("weight vectors must form a 2-D matrix")
        if np.any(vecs < 0.0):
            raise ValueError("weight vectors must be nonnegative")
        if np.any(np.abs(vecs.sum(axis=1) - 1.0) > 1e-12):
            raise ValueError("every weight vector must sum to 1")
        vecs.setflags(write=False)
        object.__setattr__(self, "vectors", vecs)

    @property
    def m(self) -> int:
        return self.vectors.shape[0]

    @property
    def q(self) -> int:
        return self.vectors.shape[1]


def das_dennis_count(h: int, q: int) -> int:
    """Number of lattice points with denominator h on the q-simplex."""
    return math.comb(h + q - 1, q - 1)


def _das_dennis_rows(h: int, q: int) -> np.ndarray:
    rows: list[list[float]] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            rows.append([c / h for c in prefix + [remaining]])
            return
        for c in range(remaining, -1, -1):
            rec(prefix + [c], remaining - c, slots - 1)

    rec([], h, q)
    return np.asarray(rows, dtype=np.float64)


def make_weights(
    method: str,
    m: int,
    q: int,
    seed: int | None = None,
    h: int | None = None,
) -> WeightSet:
    """Generate m weight vectors of width q with the given method."""
    if method not in METHODS:
        raise ValueError(f"unknown weight method: {method!r}")
    if m < 1:
        raise ValueError("m must be >= 1")
    if q < 2:
        raise ValueError("q must be >= 2")

    if method == "das_dennis":
        if h is None:
            h = 1
            while das_dennis_count(h, q) < m:
                h += 1
        if das_dennis_count(h, q) < m:
            raise ValueError(
                f"H={h} yields only {das_dennis_count(h, q)} lattice vectors, need m={m}"
            )
        vecs = _das_dennis_rows(h, q)[:m]
        return WeightSet(vecs, method, seed=None, lattice_h=h)

    if method == "equispaced_2d":
        if q != 2:
            raise ValueError("equispaced_2d requires q == 2")
        if m == 1:
            vecs = np.array([[0.5, 0.5]])
        else:
            a = np.arange(m, dtype=np.float64) / (m - 1)
            vecs = np.column_stack([a, 1.0 - a])
        return WeightSet(vecs, method)

    # uniform_simplex: e_ij = -log(u_ij), rows normalized
    if seed is None:
        raise ValueError("uniform_simplex requires a seed")
    rng = np.random.default_rng(seed)
    e = -np.log(rng.random((m, q)))
    vecs = e / e.sum(axis=1, keepdims=True)
    return WeightSet(vecs, method, seed=seed)


def save_weights(path, ws: WeightSet) -> None:
    np.savetxt(path, ws.vectors, fmt="%.17g", delimiter=" ")


def load_weights(path, method: str = "loaded", seed: int | None = None) -> WeightSet:
    vecs = np.atleast_2d(np.loadtxt(path, dtype=np.float64))
    return WeightSet(vecs, method, seed=seed)
