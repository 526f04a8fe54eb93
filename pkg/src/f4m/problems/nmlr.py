"""Noisy mixed linear regression (NMLR): a native m-objective coverage problem.

m regression tasks are generated from k_star latent parameter vectors; task i
costs f_i(x) = (a_i . x - b_i)^2 with b_i = a_i . x*_{c(i)} + eps_i, where the
task-to-model assignment c is round-robin.  A set holding all ground-truth
models drives every objective to (eps_i)^2, so with sigma = 0 the ground-truth
set has sum-of-minimum exactly 0.

Draw order from the single seeded stream: ground truths (uniform [-1, 1]^d),
then the task vectors a_i (standard normal, row by row), then the noises
eps_i.  Reconstruction from the same seed is bit-identical.  The b_i are
accumulated with the same sequential dot product the evaluators use, so the
zero-noise identity holds exactly in both engines.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemSpec

__all__ = ["NMLRInstance", "nmlr_make", "nmlr_eval"]

NMLR_DEFAULT_D = 10
NMLR_DEFAULT_SIGMA = 0.1
NMLR_BOUND = 2.0
NMLR_TRUTH_BOUND = 1.0


def _seq_dot(a, x) -> float:
    s = 0.0
    for j in range(len(a)):
        s += a[j] * x[j]
    return s


class NMLRInstance:
    """Seeded NMLR problem with cached tasks and ground truths."""

    def __init__(self, m: int, d: int, k_star: int, sigma: float, seed: int):
        if k_star < 1 or k_star > m:
            raise ValueError("need 1 <= k_star <= m")
        if sigma < 0.0:
            raise ValueError("sigma must be >= 0")
        rng = np.random.default_rng(seed)
        truths = NMLR_TRUTH_BOUND * (2.0 * rng.random((k_star, d)) - 1.0)
        a = rng.standard_normal((m, d))
        eps = sigma * rng.standard_normal(m)
        b = np.empty(m, dtype=np.float64)
        for i in range(m):
            b[i] = _seq_dot(a[i], truths[i % k_star]) + eps[i]
        for arr in (truths, a, eps, b):
            arr.setflags(write=False)
        self.m = m
        self.d = d
        self.k_star = k_star
        self.sigma = sigma
        self.seed = seed
        self.ground_truth = truths
        self.task_a = a
        self.task_b = b
        self.noise = eps
        self.spec = ProblemSpec(
            name="nmlr",
            m=m,
            d=d,
            bounds=tuple((-NMLR_BOUND, NMLR_BOUND) for _ in range(d)),
        )

    def evaluate(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.d,):
            raise ValueError(f"expected {self.d} decision variables")
        out = np.empty(self.m, dtype=np.float64)
        nmlr_eval_into(self.task_a, self.task_b, x, out)
        return out


def nmlr_eval_into(a, b, x, out) -> None:
    """Scalar evaluation core, mirrored by the compiled kernel."""
    for i in range(len(b)):
        r = _seq_dot(a[i], x) - b[i]
        out[i] = r * r


def nmlr_make(
    m: int,
    d: int = NMLR_DEFAULT_D,
    k_star: int = 1,
    sigma: float = NMLR_DEFAULT_SIGMA,
    seed: int = 0,
) -> NMLRInstance:
    return NMLRInstance(m, d, k_star, sigma, seed)


def nmlr_eval(inst: NMLRInstance, x) -> np.ndarray:
    return inst.evaluate(x)
