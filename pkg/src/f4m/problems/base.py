"""Shared problem plumbing: the spec record and the plug-in protocol.

Any object exposing a ``spec`` attribute (a :class:`ProblemSpec`) and an
``evaluate(x) -> array of m floats`` method can be registered with the
problem registry and driven through the full toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

import numpy as np

__all__ = ["ProblemSpec", "Problem", "check_bounds"]


@dataclass(frozen=True)
class ProblemSpec:
    """Static description of a problem: name, sizes, and box bounds."""

    name: str
    m: int
    d: int
    bounds: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise ValueError("m and d must be >= 1")
        if len(self.bounds) != self.d:
            raise ValueError("bounds length must equal d")
        for lo, hi in self.bounds:
            if not lo < hi:
                raise ValueError(f"invalid bound pair ({lo}, {hi})")

    def lower(self) -> np.ndarray:
        return np.asarray([b[0] for b in self.bounds], dtype=np.float64)

    def upper(self) -> np.ndarray:
        return np.asarray([b[1] for b in self.bounds], dtype=np.float64)


@runtime_checkable
class Problem(Protocol):
    spec: ProblemSpec

    def evaluate(self, x) -> np.ndarray: ...


def check_bounds(x: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> None:
    if np.any(x < lo) or np.any(x > hi):
        raise ValueError("decision vector out of bounds")
