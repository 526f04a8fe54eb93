"""R2-based transform: turn any q-objective problem into an m-objective
coverage instance, plus the R2 indicator it mirrors.

Each new objective is the Tchebycheff scalarization of the base objectives
along one weight vector:

    F_i(x) = max_j w_ij * |f_j(x) - z*_j|

so minimizing the sum-of-minimum of the transformed set over k solutions is
exactly m times the R2 indicator of that set on the base problem.
"""

from __future__ import annotations

import numpy as np

from ..core import SolutionSet, tch_scalarize
from .base import ProblemSpec
from .weights import WeightSet

__all__ = ["F4MProblem", "f4m_transform", "r2_indicator"]


class F4MProblem:
    """A base problem wrapped with a weight set and utopian point."""

    def __init__(self, base, weights: WeightSet, z_star=None):
        q = base.spec.m
        if weights.q != q:
            raise ValueError(
                f"weight width {weights.q} does not match base objective count {q}"
            )
        if z_star is None:
            z_star = np.zeros(q)
        z_star = np.ascontiguousarray(np.asarray(z_star, dtype=np.float64))
        if z_star.shape != (q,):
            raise ValueError("z_star length must equal base objective count")
        z_star.setflags(write=False)
        self.base = base
        self.weights = weights
        self.z_star = z_star
        self.spec = ProblemSpec(
            name=f"f4m-{base.spec.name}",
            m=weights.m,
            d=base.spec.d,
            bounds=base.spec.bounds,
        )

    def evaluate(self, x) -> np.ndarray:
        base_f = self.base.evaluate(x)
        out = np.empty(self.spec.m, dtype=np.float64)
        transform_into(base_f, self.weights.vectors, self.z_star, out)
        return out


def transform_into(base_f, w, z_star, out) -> None:
    """Scalar transform core, mirrored by the compiled kernel."""
    m, q = w.shape
    for i in range(m):
        best = 0.0
        for j in range(q):
            t = w[i, j] * abs(base_f[j] - z_star[j])
            if t > best:
                best = t
        out[i] = best


def f4m_transform(base, weights: WeightSet, z_star=None) -> F4MProblem:
    """Wrap ``base`` into an m-objective coverage instance."""
    return F4MProblem(base, weights, z_star)


def r2_indicator(sset: SolutionSet, weights: WeightSet, z_star) -> float:
    """Mean over the weight set of the best Tchebycheff value of any member.

    ``sset`` lives in the base objective space (width q).  Equals
    gws(transformed set) / m for the identical weights and z_star.
    """
    if len(sset) == 0:
        raise ValueError("empty solution set")
    if weights.m == 0:
        raise ValueError("empty weight set")
    w = weights.vectors
    total = 0.0
    for i in range(weights.m):
        best = None
        for sol in sset:
            g = tch_scalarize(sol.objectives, w[i], z_star)
            if best is None or g < best:
                best = g
        total += best
    return total / weights.m
