"""Batch experiment execution: seeded repetitions, persistence, statistics.

Repetition r of an experiment runs with seed ``seed_base + r``.  Runs execute
in a thread pool (the compiled kernels release the GIL); each run owns its
RNG and its output files, and the summary is written once at the end.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..algorithm import RunConfig, run_som_emoa
from ..algorithm.backend import get_backend
from ..algorithm.descriptor import EvalDescriptor
from ..problems import make_problem, save_weights
from ..selection import greedy_subset_indices
from .config import ExperimentConfig, dump_config, fingerprint
from . import io as hio

__all__ = ["RunRecord", "run_experiment", "summarize", "run_single"]


@dataclass
class RunRecord:
    fingerprint: str
    seed: int
    trace: list[tuple[int, float]]
    final_x: np.ndarray
    final_f: np.ndarray
    duration: float

    @property
    def final_gws(self) -> float:
        return self.trace[-1][1]


def _random_search_run(problem, cfg: ExperimentConfig, seed: int):
    """Random sampling with an elitist greedy-k incumbent.

    The trace reports the best greedy k-subset seen at any log point, so it is
    non-increasing by construction and its last value is the returned set's
    sum-of-minimum.
    """
    desc = EvalDescriptor(problem)
    be = get_backend(cfg.backend)
    rng = np.random.default_rng(seed)
    budget, k, log_every = cfg.evals, cfg.k, cfg.log_every
    pool_x = np.empty((budget, desc.d))
    pool_f = np.empty((budget, desc.m))
    trace: list[tuple[int, float]] = []
    best_g = np.inf
    best_idx: list[int] = []
    done = 0
    while done < budget:
        n = min(log_every, budget - done)
        xs = desc.lo + rng.random((n, desc.d)) * (desc.hi - desc.lo)
        pool_x[done:done + n] = xs
        pool_f[done:done + n] = be.evaluate_batch(desc, xs)
        done += n
        if done >= k:
            idx = greedy_subset_indices(pool_f[:done], k)
            g = float(np.minimum.reduce(pool_f[idx]).sum())
            if g < best_g:
                best_g = g
                best_idx = idx
        trace.append((done, best_g))
    return pool_x[best_idx].copy(), pool_f[best_idx].copy(), trace


def _som_emoa_run(problem, cfg: ExperimentConfig, seed: int):
    flags = cfg.run_flags()
    rc = RunConfig(
        k=cfg.k,
        eval_budget=cfg.evals,
        init_sample_n=cfg.init_size,
        eta_c=cfg.eta_c,
        eta_m=cfg.eta_m,
        p_c=cfg.p_c,
        p_m=cfg.p_m,
        seed=seed,
        use_archive=flags["use_archive"],
        use_probability_p=flags["use_probability_p"],
        log_every=cfg.log_every,
    )
    result = run_som_emoa(problem, rc, backend=cfg.backend)
    return (
        result.final.decisions_array(),
        result.final.objectives_array(),
        result.trace,
    )


def _one_run(cfg: ExperimentConfig, fp: str, seed: int, out_dir: Path | None) -> RunRecord:
    problem = make_problem(cfg.problem, **cfg.problem_params(seed))
    t0 = time.perf_counter()
    if cfg.algorithm == "random_search":
        final_x, final_f, trace = _random_search_run(problem, cfg, seed)
    else:
        final_x, final_f, trace = _som_emoa_run(problem, cfg, seed)
    duration = time.perf_counter() - t0

    if out_dir is not None:
        seed_dir = out_dir / f"seed_{seed}"
        seed_dir.mkdir(parents=True, exist_ok=True)
        hio.write_trace(seed_dir / "trace.csv", trace)
        hio.write_set(seed_dir / "set.tsv", final_x, final_f)
        if cfg.weight_seed is None and hasattr(problem, "weights"):
            save_weights(seed_dir / "weights.txt", problem.weights)
    return RunRecord(fp, seed, trace, final_x, final_f, duration)


def run_experiment(cfg: ExperimentConfig, persist: bool = True) -> list[RunRecord]:
    """Execute ``cfg.reps`` seeded runs; optionally persist traces, final
    sets, weights, the resolved config, and a summary JSON."""
    cfg = cfg.validated()
    fp = fingerprint(cfg)
    out_dir = None
    if persist:
        out_dir = Path(cfg.out) / fp
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "config.ini").write_text(dump_config(cfg), encoding="utf-8")
        if cfg.weight_seed is not None:
            probe = make_problem(cfg.problem, **cfg.problem_params(cfg.seed_base))
            if hasattr(probe, "weights"):
                save_weights(out_dir / "weights.txt", probe.weights)

    seeds = [cfg.seed_base + r for r in range(cfg.reps)]
    t0 = time.perf_counter()
    if cfg.threads > 1 and cfg.reps > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            records = list(pool.map(lambda s: _one_run(cfg, fp, s, out_dir), seeds))
    else:
        records = [_one_run(cfg, fp, s, out_dir) for s in seeds]
    wall = time.perf_counter() - t0

    if persist:
        stats = summarize(records)[0]
        summary = {
            "fingerprint": fp,
            "config": {k: v for k, v in _config_echo(cfg).items()},
            "finals": {str(r.seed): r.final_gws for r in records},
            "mean": stats["mean"],
            "std": stats["std"],
            "min": stats["min"],
            "max": stats["max"],
            "wall_clock_seconds": wall,
            "per_seed_seconds": {str(r.seed): r.duration for r in records},
        }
        hio.write_summary(out_dir / "summary.json", summary)
    return records


def _config_echo(cfg: ExperimentConfig) -> dict:
    from dataclasses import asdict

    return {k: v for k, v in asdict(cfg).items() if v is not None}


def summarize(records) -> list[dict]:
    """Group records by fingerprint; sample mean and n-1 standard deviation
    of the final sum-of-minimum per group (std 0 for singleton groups)."""
    if not records:
        raise ValueError("no records to summarize")
    groups: dict[str, list[RunRecord]] = {}
    for r in records:
        groups.setdefault(r.fingerprint, []).append(r)
    rows = []
    for fp, recs in groups.items():
        finals = np.asarray([r.final_gws for r in recs], dtype=np.float64)
        rows.append(
            {
                "fingerprint": fp,
                "n": len(finals),
                "mean": float(finals.mean()),
                "std": float(finals.std(ddof=1)) if len(finals) > 1 else 0.0,
                "min": float(finals.min()),
                "max": float(finals.max()),
            }
        )
    return rows


def run_single(cfg: ExperimentConfig, persist: bool = True) -> RunRecord:
    """One run (repetition 0), same layout as a full experiment."""
    from dataclasses import replace

    return run_experiment(replace(cfg, reps=1), persist=persist)[0]
