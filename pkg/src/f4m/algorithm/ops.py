"""Reference operators for the sum-of-minimum evolutionary loop.

These scalar implementations define the semantics; the compiled kernels in
``_kernels.pyx`` mirror them operation for operation so both engines consume
the same RNG stream and produce bit-identical results.

RNG draw order (uniforms from a single numpy Generator), per generation:

1. parent-1 index            -- 1 draw, index = floor(u * k)
2. parent-2 selector         -- 1 draw: archive slot via inverse CDF of the
                                probability vector p (or uniform slot when p
                                is disabled; or population index when the
                                archive is disabled)
3. crossover gate            -- 1 draw, applied iff u <= p_c
4. per coordinate j:         -- 3 draws: (cross mask, spread, sign)
5. per coordinate j:         -- 2 draws: (mutation site, magnitude)
6. removal fallback          -- 1 draw, always consumed, used only when the
                                offspring weakly improves every objective

Totals 4 + 5d uniforms per generation, independent of the data.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "DRAWS_PER_GEN_FIXED",
    "sbx_pair",
    "sbx_crossover",
    "poly_mutation",
    "pick_index",
    "categorical_index",
    "mating_probabilities",
    "archive_init_arrays",
    "archive_update_arrays",
    "fast_removal",
    "naive_removal",
    "seq_sum",
]


def DRAWS_PER_GEN_FIXED(d: int) -> int:
    return 4 + 5 * d


def seq_sum(values) -> float:
    """Left-to-right float accumulation; removal tie-breaking relies on both
    engines summing in this exact order."""
    s = 0.0
    for v in values:
        s += v
    return s


def pick_index(u: float, n: int) -> int:
    """Uniform index from one uniform draw."""
    i = int(u * n)
    return n - 1 if i >= n else i


def categorical_index(p, u: float) -> int:
    """Inverse-CDF draw over probability vector p."""
    cum = 0.0
    for i in range(len(p)):
        cum += p[i]
        if u < cum:
            return i
    return len(p) - 1


def mating_probabilities(v, u) -> np.ndarray:
    """Objective-selection distribution p = (v - u) / ||v - u||_1.

    Falls back to the uniform distribution when the population already matches
    the archive ideal on every objective (zero norm).
    """
    m = len(v)
    diff = np.empty(m, dtype=np.float64)
    norm = 0.0
    for i in range(m):
        diff[i] = v[i] - u[i]
        norm += diff[i]
    if norm > 0.0:
        for i in range(m):
            diff[i] = diff[i] / norm
    else:
        for i in range(m):
            diff[i] = 1.0 / m
    return diff


def sbx_pair(p1, p2, eta_c: float, p_c: float, lo, hi, us, clip: bool = True):
    """Simulated binary crossover; returns both children.

    ``us`` supplies the 1 + 3d uniforms in documented order.  Children are
    mean +/- beta * diff with a random sign flip per coordinate, so
    c1 + c2 == p1 + p2 up to rounding before clipping.
    """
    d = len(p1)
    c1 = np.empty(d, dtype=np.float64)
    c2 = np.empty(d, dtype=np.float64)
    gate = us[0] <= p_c
    exponent = 1.0 / (eta_c + 1.0)
    for j in range(d):
        u_mask = us[1 + 3 * j]
        u_beta = us[2 + 3 * j]
        u_sign = us[3 + 3 * j]
        if not gate or u_mask >= 0.5:
            c1[j] = p1[j]
            c2[j] = p2[j]
            continue
        if u_beta <= 0.5:
            beta = math.pow(2.0 * u_beta, exponent)
        else:
            beta = math.pow(2.0 - 2.0 * u_beta, -exponent)
        if u_sign < 0.5:
            beta = -beta
        mean = 0.5 * (p1[j] + p2[j])
        diff = 0.5 * (p1[j] - p2[j])
        c1[j] = mean + beta * diff
        c2[j] = mean - beta * diff
        if clip:
            c1[j] = min(max(c1[j], lo[j]), hi[j])
            c2[j] = min(max(c2[j], lo[j]), hi[j])
    return c1, c2


def sbx_crossover(p1, p2, eta_c: float, p_c: float, lo, hi, rng) -> np.ndarray:
    """Bounded SBX; the offspring is the first child."""
    us = rng.random(1 + 3 * len(p1))
    c1, _ = sbx_pair(p1, p2, eta_c, p_c, lo, hi, us)
    return c1


def poly_mutation_inplace(x, eta_m: float, p_m: float, lo, hi, us) -> None:
    """Bounded polynomial mutation; ``us`` supplies 2d uniforms."""
    d = len(x)
    exponent = 1.0 / (eta_m + 1.0)
    for j in range(d):
        u_site = us[2 * j]
        u = us[1 + 2 * j]
        if u_site >= p_m:
            continue
        span = hi[j] - lo[j]
        if u <= 0.5:
            d1 = (x[j] - lo[j]) / span
            dq = math.pow(
                2.0 * u + (1.0 - 2.0 * u) * math.pow(1.0 - d1, eta_m + 1.0), exponent
            ) - 1.0
        else:
            d2 = (hi[j] - x[j]) / span
            dq = 1.0 - math.pow(
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * math.pow(1.0 - d2, eta_m + 1.0),
                exponent,
            )
        x[j] = min(max(x[j] + dq * span, lo[j]), hi[j])


def poly_mutation(x, eta_m: float, p_m: float, lo, hi, rng) -> np.ndarray:
    out = np.array(x, dtype=np.float64)
    us = rng.random(2 * len(out))
    poly_mutation_inplace(out, eta_m, p_m, lo, hi, us)
    return out


def archive_init_arrays(sample_x: np.ndarray, sample_f: np.ndarray):
    """Per-objective argmin over the initial sample; ties to the lowest index.

    Returns (arch_x (m,d), arch_f (m,m), u (m,)).
    """
    if len(sample_f) == 0:
        raise ValueError("empty sample")
    idx = np.argmin(sample_f, axis=0)
    arch_x = sample_x[idx].copy()
    arch_f = sample_f[idx].copy()
    u = sample_f[idx, np.arange(sample_f.shape[1])].copy()
    return arch_x, arch_f, u


def archive_update_arrays(arch_x, arch_f, u, off_x, off_f) -> None:
    """Replace slot i iff the offspring strictly improves objective i."""
    for i in range(len(u)):
        if off_f[i] < u[i]:
            arch_x[i] = off_x
            arch_f[i] = off_f
            u[i] = off_f[i]


def fast_removal(pop_f: np.ndarray, v: np.ndarray, off_f: np.ndarray, u_rem: float):
    """Pick the member of P + offspring whose removal minimizes the
    sum-of-minimum, reusing the cached population minima v.

    Returns (removed_index, new_v) with index k meaning the offspring.  Ties
    keep the offspring out (strict-< replacement), then prefer the earliest
    scanned population member.  When the offspring weakly improves every
    objective, a uniformly random member is removed (consuming ``u_rem``) and
    new_v is the offspring's objective vector.
    """
    k, m = pop_f.shape
    improves = np.empty(m, dtype=np.bool_)
    n_improve = 0
    for i in range(m):
        imp = off_f[i] <= v[i]
        improves[i] = imp
        if imp:
            n_improve += 1

    if n_improve == m:
        return pick_index(u_rem, k), np.array(off_f, dtype=np.float64)

    g_min = seq_sum(v)
    removed = k
    best_v = np.array(v, dtype=np.float64)
    cand_v = np.empty(m, dtype=np.float64)
    for x_idx in range(k):
        g = 0.0
        for i in range(m):
            if improves[i]:
                vi = off_f[i]
            elif pop_f[x_idx, i] == v[i]:
                # this member held the minimum: rescan survivors + offspring
                mn = off_f[i]
                for jj in range(k):
                    if jj != x_idx and pop_f[jj, i] < mn:
                        mn = pop_f[jj, i]
                vi = mn
            else:
                vi = v[i]
            cand_v[i] = vi
            g += vi
        if g < g_min:
            g_min = g
            removed = x_idx
            best_v[:] = cand_v
    return removed, best_v


def naive_removal(pop_f: np.ndarray, v: np.ndarray, off_f: np.ndarray, u_rem: float):
    """Reference oracle: recompute the sum-of-minimum from scratch for every
    candidate removal.  Same contract and tie-breaking as :func:`fast_removal`.
    """
    k, m = pop_f.shape
    all_improve = True
    for i in range(m):
        if off_f[i] > v[i]:
            all_improve = False
            break
    if all_improve:
        return pick_index(u_rem, k), np.array(off_f, dtype=np.float64)

    # removing the offspring leaves the current population
    best_v = np.minimum.reduce(pop_f, axis=0)
    g_min = seq_sum(best_v)
    removed = k
    for x_idx in range(k):
        rows = [pop_f[jj] for jj in range(k) if jj != x_idx]
        rows.append(off_f)
        cand_v = np.minimum.reduce(rows)
        g = seq_sum(cand_v)
        if g < g_min:
            g_min = g
            removed = x_idx
            best_v = cand_v
    return removed, np.array(best_v, dtype=np.float64)
