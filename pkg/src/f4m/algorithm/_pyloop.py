"""Pure-Python engine: the fallback implementation of the generation loop.

Mirrors ``_kernels.pyx`` exactly (same arithmetic, same RNG consumption), so
a run executed here is bit-identical to one executed by the compiled kernels.
Roughly two orders of magnitude slower; selected only when the extension is
unavailable or explicitly requested.
"""

from __future__ import annotations

import numpy as np

from ..problems.dtlz import dtlz_eval_into
from ..problems.nmlr import nmlr_eval_into
from ..problems.transform import transform_into
from ..problems.wfg import wfg_eval_into
from .descriptor import KIND_CALLABLE, KIND_DTLZ, KIND_NMLR, KIND_WFG, EvalDescriptor
from . import ops

__all__ = ["evaluate_point", "evaluate_batch", "run_generations", "fast_removal"]

fast_removal = ops.fast_removal


def evaluate_point(desc: EvalDescriptor, x, out, base_work) -> None:
    if desc.kind == KIND_CALLABLE:
        # fresh copy: plug-in evaluators must not see live engine buffers
        out[:] = desc.pyfunc(np.array(x, dtype=np.float64))
        return
    base = base_work if desc.transform else out
    if desc.kind == KIND_DTLZ:
        dtlz_eval_into(desc.variant, x, desc.q, base)
    elif desc.kind == KIND_WFG:
        wfg_eval_into(desc.variant, x, desc.q, base)
    elif desc.kind == KIND_NMLR:
        nmlr_eval_into(desc.nmlr_a, desc.nmlr_b, x, base)
    else:
        raise ValueError(f"unknown problem kind {desc.kind}")
    if desc.transform:
        transform_into(base, desc.weights, desc.z_star, out)


def evaluate_batch(desc: EvalDescriptor, xs: np.ndarray) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.float64)
    out = np.empty((len(xs), desc.m), dtype=np.float64)
    base_work = np.empty(desc.q, dtype=np.float64)
    for i in range(len(xs)):
        evaluate_point(desc, xs[i], out[i], base_work)
    return out


def run_generations(
    desc: EvalDescriptor,
    pop_x: np.ndarray,
    pop_f: np.ndarray,
    v: np.ndarray,
    arch_x: np.ndarray,
    arch_f: np.ndarray,
    u: np.ndarray,
    hist_min: np.ndarray,
    rng,
    n_gens: int,
    eta_c: float,
    eta_m: float,
    p_c: float,
    p_m: float,
    use_archive: bool,
    use_p: bool,
    debug: bool,
) -> int:
    """Advance the (mu+1) loop by ``n_gens`` generations in place.

    Returns the number of debug violations (generations where the archive
    ideal diverged from the running history minimum); always 0 when
    ``debug`` is off.
    """
    k, d = pop_x.shape
    m = pop_f.shape[1]
    lo, hi = desc.lo, desc.hi
    base_work = np.empty(desc.q, dtype=np.float64)
    off_f = np.empty(m, dtype=np.float64)
    violations = 0
    sbx_end = 3 + 3 * d
    mut_end = sbx_end + 2 * d

    for _ in range(n_gens):
        us = rng.random(4 + 5 * d)
        i1 = ops.pick_index(us[0], k)
        if use_archive:
            if use_p:
                p = ops.mating_probabilities(v, u)
            else:
                p = np.full(m, 1.0 / m)
            slot = ops.categorical_index(p, us[1])
            parent2 = arch_x[slot]
        else:
            parent2 = pop_x[ops.pick_index(us[1], k)]

        child, _ = ops.sbx_pair(pop_x[i1], parent2, eta_c, p_c, lo, hi, us[2:sbx_end])
        ops.poly_mutation_inplace(child, eta_m, p_m, lo, hi, us[sbx_end:mut_end])

        evaluate_point(desc, child, off_f, base_work)
        ops.archive_update_arrays(arch_x, arch_f, u, child, off_f)

        removed, new_v = ops.fast_removal(pop_f, v, off_f, us[mut_end])
        if removed != k:
            pop_x[removed] = child
            pop_f[removed] = off_f
        v[:] = new_v

        if debug:
            np.minimum(hist_min, off_f, out=hist_min)
            if not np.array_equal(u, hist_min):
                violations += 1
    return violations
