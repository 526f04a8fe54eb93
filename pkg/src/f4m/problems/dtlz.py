"""DTLZ1-4 scalable benchmark problems.

Scalar, point-at-a-time evaluation.  The compiled kernels reimplement the
same arithmetic in C with identical operation order, so both engines produce
bit-identical objective values; keep the two in sync when touching formulas.

Conventions: q objectives, q-1 position variables, n_distance distance
variables (5 for DTLZ1, 10 for DTLZ2-4), decision space [0, 1]^d.
"""

from __future__ import annotations

import math

import numpy as np

from .base import ProblemSpec, check_bounds

__all__ = ["DTLZProblem", "dtlz_eval", "dtlz_dimension", "DTLZ_DISTANCE_VARS"]

DTLZ_DISTANCE_VARS = {1: 5, 2: 10, 3: 10, 4: 10}
DTLZ4_ALPHA = 100.0
_HALF_PI = 0.5 * math.pi


def dtlz_dimension(variant: int, q: int) -> int:
    if variant not in DTLZ_DISTANCE_VARS:
        raise ValueError(f"unsupported DTLZ variant: {variant}")
    return q - 1 + DTLZ_DISTANCE_VARS[variant]


def dtlz_eval_into(variant: int, x, q: int, out) -> None:
    """Evaluate DTLZ<variant> at x (no bounds check) into ``out``.

    Shared by the public API and the pure-python engine; the compiled kernel
    mirrors this function exactly.
    """
    d = len(x)
    if variant == 1:
        g = 0.0
        for j in range(q - 1, d):
            t = x[j] - 0.5
            g += t * t - math.cos(20.0 * math.pi * t)
        g = 100.0 * (float(d - q + 1) + g)
        for i in range(q):
            f = 0.5 * (1.0 + g)
            for j in range(q - 1 - i):
                f *= x[j]
            if i > 0:
                f *= 1.0 - x[q - 1 - i]
            out[i] = f
    elif variant in (2, 3, 4):
        g = 0.0
        if variant == 3:
            for j in range(q - 1, d):
                t = x[j] - 0.5
                g += t * t - math.cos(20.0 * math.pi * t)
            g = 100.0 * (float(d - q + 1) + g)
        else:
            for j in range(q - 1, d):
                t = x[j] - 0.5
                g += t * t
        for i in range(q):
            f = 1.0 + g
            for j in range(q - 1 - i):
                y = x[j]
                if variant == 4:
                    y = math.pow(y, DTLZ4_ALPHA)
                f *= math.cos(_HALF_PI * y)
            if i > 0:
                y = x[q - 1 - i]
                if variant == 4:
                    y = math.pow(y, DTLZ4_ALPHA)
                f *= math.sin(_HALF_PI * y)
            out[i] = f
    else:
        raise ValueError(f"unsupported DTLZ variant: {variant}")


def dtlz_eval(variant: int, x, q: int) -> np.ndarray:
    """Evaluate DTLZ<variant> with q objectives at decision vector x."""
    if variant not in DTLZ_DISTANCE_VARS:
        raise ValueError(f"unsupported DTLZ variant: {variant}")
    x = np.asarray(x, dtype=np.float64)
    d = dtlz_dimension(variant, q)
    if x.shape != (d,):
        raise ValueError(f"DTLZ{variant} with q={q} expects d={d} variables, got {x.shape}")
    check_bounds(x, np.zeros(d), np.ones(d))
    out = np.empty(q, dtype=np.float64)
    dtlz_eval_into(variant, x, q, out)
    return out


class DTLZProblem:
    """DTLZ problem instance exposing the common (spec, evaluate) surface."""

    def __init__(self, variant: int, q: int):
        if variant not in DTLZ_DISTANCE_VARS:
            raise ValueError(f"unsupported DTLZ variant: {variant}")
        if q < 2:
            raise ValueError("DTLZ needs q >= 2")
        self.variant = variant
        self.q = q
        d = dtlz_dimension(variant, q)
        self.spec = ProblemSpec(
            name=f"dtlz{variant}",
            m=q,
            d=d,
            bounds=tuple((0.0, 1.0) for _ in range(d)),
        )

    def evaluate(self, x) -> np.ndarray:
        return dtlz_eval(self.variant, x, self.q)
