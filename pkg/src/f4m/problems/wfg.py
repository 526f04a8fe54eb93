"""WFG1-4 scalable benchmark problems.

Scalar staged pipeline (normalize -> shift/bias transformations -> reductions
-> underlying parameters -> shape functions) following the canonical WFG
toolkit definitions.  The compiled kernels mirror this function operation for
operation; keep the two in sync.

Conventions: q objectives, k_pos = q - 1 position parameters, l = 10 distance
parameters (so d = q + 9), variable j in [0, 2(j+1)].  WFG2/3 need l even.
Tiny numeric drift outside [0, 1] after a transformation is clamped, matching
the reference toolkit behaviour.
"""

from __future__ import annotations

import math

import numpy as np

from .base import ProblemSpec, check_bounds

__all__ = ["WFGProblem", "wfg_eval", "wfg_dimension", "WFG_DISTANCE_VARS"]

WFG_DISTANCE_VARS = 10
_EPS01 = 1e-10
_HALF_PI = 0.5 * math.pi


def wfg_dimension(variant: int, q: int) -> int:
    if variant not in (1, 2, 3, 4):
        raise ValueError(f"unsupported WFG variant: {variant}")
    return q - 1 + WFG_DISTANCE_VARS


def _clamp01(v: float) -> float:
    if v < 0.0 and v >= -_EPS01:
        return 0.0
    if v > 1.0 and v <= 1.0 + _EPS01:
        return 1.0
    return v


def _s_linear(y: float, a: float) -> float:
    return _clamp01(abs(y - a) / abs(math.floor(a - y) + a))


def _s_multi(y: float, a: float, b: float, c: float) -> float:
    t1 = abs(y - c) / (2.0 * (math.floor(c - y) + c))
    t2 = (4.0 * a + 2.0) * math.pi * (0.5 - t1)
    return _clamp01((1.0 + math.cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0))


def _b_flat(y: float, a: float, b: float, c: float) -> float:
    v = (
        a
        + min(0.0, math.floor(y - b)) * (a * (b - y) / b)
        - min(0.0, math.floor(c - y)) * ((1.0 - a) * (y - c) / (1.0 - c))
    )
    return _clamp01(v)


def wfg_eval_into(variant: int, x, q: int, out) -> None:
    """Evaluate WFG<variant> at x (no bounds check) into ``out``."""
    d = len(x)
    kpos = q - 1
    l = d - kpos
    y = [0.0] * d
    for i in range(d):
        y[i] = x[i] / (2.0 * (i + 1))

    # first transformation: shift distance (1-3) or all (4) parameters
    if variant == 4:
        for i in range(d):
            y[i] = _s_multi(y[i], 30.0, 10.0, 0.35)
    else:
        for i in range(kpos, d):
            y[i] = _s_linear(y[i], 0.35)

    t = [0.0] * q
    gap = kpos // (q - 1)
    if variant == 1:
        for i in range(kpos, d):
            y[i] = _b_flat(y[i], 0.8, 0.75, 0.85)
        for i in range(d):
            y[i] = _clamp01(math.pow(y[i], 0.02))
        # weighted sums with w_i = 2(i+1)
        for jj in range(q - 1):
            num = 0.0
            den = 0.0
            for i in range(jj * gap, (jj + 1) * gap):
                w = 2.0 * (i + 1)
                num += w * y[i]
                den += w
            t[jj] = _clamp01(num / den)
        num = 0.0
        den = 0.0
        for i in range(kpos, d):
            w = 2.0 * (i + 1)
            num += w * y[i]
            den += w
        t[q - 1] = _clamp01(num / den)
    elif variant in (2, 3):
        # non-separable pairwise reduction of the distance block
        half = l // 2
        for ii in range(half):
            a = y[kpos + 2 * ii]
            b = y[kpos + 2 * ii + 1]
            y[kpos + ii] = _clamp01((a + b + 2.0 * abs(a - b)) / 3.0)
        for jj in range(q - 1):
            s = 0.0
            for i in range(jj * gap, (jj + 1) * gap):
                s += y[i]
            t[jj] = _clamp01(s / gap)
        s = 0.0
        for i in range(kpos, kpos + half):
            s += y[i]
        t[q - 1] = _clamp01(s / half)
    else:  # variant 4
        for jj in range(q - 1):
            s = 0.0
            for i in range(jj * gap, (jj + 1) * gap):
                s += y[i]
            t[jj] = _clamp01(s / gap)
        s = 0.0
        for i in range(kpos, d):
            s += y[i]
        t[q - 1] = _clamp01(s / l)

    # underlying parameters; WFG3's degenerate front has A_j = 0 for j >= 1
    tm = t[q - 1]
    xx = [0.0] * q
    for j in range(q - 1):
        aj = 0.0 if (variant == 3 and j >= 1) else 1.0
        scale = tm if tm > aj else aj
        xx[j] = scale * (t[j] - 0.5) + 0.5
    xx[q - 1] = tm

    for i in range(q):
        m1 = i + 1  # 1-based objective index
        if variant == 1 or variant == 2:
            if m1 < q:
                h = 1.0
                for j in range(q - m1):
                    h *= 1.0 - math.cos(_HALF_PI * xx[j])
                if m1 > 1:
                    h *= 1.0 - math.sin(_HALF_PI * xx[q - m1])
            elif variant == 1:
                aux = 10.0 * math.pi  # 2*A*pi with A = 5
                h = 1.0 - xx[0] - math.cos(aux * xx[0] + _HALF_PI) / aux
            else:
                c = math.cos(5.0 * math.pi * xx[0])
                h = 1.0 - xx[0] * c * c
        elif variant == 3:
            if m1 == 1:
                h = 1.0
                for j in range(q - 1):
                    h *= xx[j]
            elif m1 < q:
                h = 1.0
                for j in range(q - m1):
                    h *= xx[j]
                h *= 1.0 - xx[q - m1]
            else:
                h = 1.0 - xx[0]
        else:  # variant 4, concave
            h = 1.0
            for j in range(q - m1):
                h *= math.sin(_HALF_PI * xx[j])
            if m1 > 1:
                h *= math.cos(_HALF_PI * xx[q - m1])
        out[i] = xx[q - 1] + (2.0 * m1) * _clamp01(h)


def wfg_eval(variant: int, x, q: int) -> np.ndarray:
    """Evaluate WFG<variant> with q objectives at decision vector x."""
    if variant not in (1, 2, 3, 4):
        raise ValueError(f"unsupported WFG variant: {variant}")
    x = np.asarray(x, dtype=np.float64)
    d = wfg_dimension(variant, q)
    if x.shape != (d,):
        raise ValueError(f"WFG{variant} with q={q} expects d={d} variables, got {x.shape}")
    hi = 2.0 * np.arange(1, d + 1, dtype=np.float64)
    check_bounds(x, np.zeros(d), hi)
    out = np.empty(q, dtype=np.float64)
    wfg_eval_into(variant, x, q, out)
    return out


class WFGProblem:
    """WFG problem instance exposing the common (spec, evaluate) surface."""

    def __init__(self, variant: int, q: int):
        if variant not in (1, 2, 3, 4):
            raise ValueError(f"unsupported WFG variant: {variant}")
        if q < 2:
            raise ValueError("WFG needs q >= 2")
        self.variant = variant
        self.q = q
        d = wfg_dimension(variant, q)
        self.spec = ProblemSpec(
            name=f"wfg{variant}",
            m=q,
            d=d,
            bounds=tuple((0.0, 2.0 * (j + 1)) for j in range(d)),
        )

    def evaluate(self, x) -> np.ndarray:
        return wfg_eval(self.variant, x, self.q)
