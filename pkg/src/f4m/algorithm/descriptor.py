"""Flattened problem descriptor consumed by the engines.

Built-in problems (DTLZ, WFG, NMLR, optionally wrapped by the R2 transform)
are described by a kind code plus plain arrays so the compiled kernels can
evaluate them without touching the interpreter; anything else falls back to a
per-point Python callback.
"""

from __future__ import annotations

import numpy as np

from ..problems.dtlz import DTLZProblem
from ..problems.nmlr import NMLRInstance
from ..problems.transform import F4MProblem
from ..problems.wfg import WFGProblem

__all__ = ["EvalDescriptor", "KIND_DTLZ", "KIND_WFG", "KIND_NMLR", "KIND_CALLABLE"]

KIND_DTLZ = 0
KIND_WFG = 1
KIND_NMLR = 2
KIND_CALLABLE = 3

_EMPTY_MAT = np.zeros((0, 0), dtype=np.float64)
_EMPTY_VEC = np.zeros(0, dtype=np.float64)


class EvalDescriptor:
    __slots__ = (
        "kind",
        "variant",
        "q",
        "d",
        "m",
        "lo",
        "hi",
        "transform",
        "weights",
        "z_star",
        "nmlr_a",
        "nmlr_b",
        "pyfunc",
    )

    def __init__(self, problem):
        spec = problem.spec
        self.m = spec.m
        self.d = spec.d
        self.lo = np.ascontiguousarray(spec.lower())
        self.hi = np.ascontiguousarray(spec.upper())
        self.transform = False
        self.weights = _EMPTY_MAT
        self.z_star = _EMPTY_VEC
        self.nmlr_a = _EMPTY_MAT
        self.nmlr_b = _EMPTY_VEC
        self.pyfunc = None
        self.variant = 0

        base = problem
        if isinstance(problem, F4MProblem):
            base = problem.base
            if isinstance(base, (DTLZProblem, WFGProblem, NMLRInstance)):
                self.transform = True
                # writable copies: the kernels take non-const memoryviews
                self.weights = np.array(problem.weights.vectors, dtype=np.float64, order="C")
                self.z_star = np.array(problem.z_star, dtype=np.float64, order="C")
            else:
                base = problem  # opaque base: evaluate the whole wrapper in Python

        if isinstance(base, DTLZProblem):
            self.kind = KIND_DTLZ
            self.variant = base.variant
            self.q = base.q
        elif isinstance(base, WFGProblem):
            self.kind = KIND_WFG
            self.variant = base.variant
            self.q = base.q
        elif isinstance(base, NMLRInstance):
            self.kind = KIND_NMLR
            self.q = base.m
            self.nmlr_a = np.array(base.task_a, dtype=np.float64, order="C")
            self.nmlr_b = np.array(base.task_b, dtype=np.float64, order="C")
        else:
            self.kind = KIND_CALLABLE
            self.q = spec.m
            self.pyfunc = base.evaluate

    @property
    def is_native(self) -> bool:
        return self.kind != KIND_CALLABLE
