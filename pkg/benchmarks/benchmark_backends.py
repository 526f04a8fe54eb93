"""Compare the compiled and pure-Python engines: throughput and agreement.

Usage: python benchmarks/benchmark_backends.py [--evals N]

Runs the same seeded experiments on both engines, verifies the traces are
bit-identical, and reports evaluations/second plus the speedup.
"""

import argparse
import time

import numpy as np

from f4m.algorithm import RunConfig, run_som_emoa
from f4m.algorithm.backend import available_backends, get_backend
from f4m.algorithm.descriptor import EvalDescriptor
from f4m.problems import make_problem

CASES = [
    ("f4m-dtlz2", dict(m=25, q=3, weight_seed=0), dict(k=5)),
    ("f4m-dtlz1", dict(m=50, q=3, weight_seed=0), dict(k=5)),
    ("f4m-wfg4", dict(m=50, q=3, weight_seed=0), dict(k=5)),
    ("nmlr", dict(m=25, d=10, k_star=5, sigma=0.1, seed=0), dict(k=5)),
]


def time_run(problem, cfg, backend):
    t0 = time.perf_counter()
    result = run_som_emoa(problem, cfg, backend=backend)
    return time.perf_counter() - t0, result


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--evals", type=int, default=20_000,
                    help="evaluation budget per run (default 20000)")
    args = ap.parse_args()

    if "compiled" not in available_backends():
        print("compiled kernels not built; nothing to compare")
        return 1

    print(f"{'case':<34} {'python':>12} {'compiled':>12} {'speedup':>9}  identical")
    for name, pkw, rkw in CASES:
        problem = make_problem(name, **pkw)
        cfg = RunConfig(eval_budget=args.evals, init_sample_n=600, seed=1,
                        log_every=args.evals // 10, **rkw)
        t_py, r_py = time_run(problem, cfg, "python")
        t_c, r_c = time_run(problem, cfg, "compiled")
        same = r_py.trace == r_c.trace and r_py.final == r_c.final
        label = f"{name} m={problem.spec.m} run"
        print(f"{label:<34} {args.evals / t_py:>10.0f}/s {args.evals / t_c:>10.0f}/s "
              f"{t_py / t_c:>8.1f}x  {same}")
        if not same:
            print("  ENGINE MISMATCH - traces differ")
            return 1

    # batch evaluation kernel on its own
    problem = make_problem("f4m-wfg1", m=50, q=3, weight_seed=0)
    desc = EvalDescriptor(problem)
    xs = desc.lo + np.random.default_rng(0).random((50_000, desc.d)) * (desc.hi - desc.lo)
    t0 = time.perf_counter()
    f_py = get_backend("python").evaluate_batch(desc, xs)
    t_py = time.perf_counter() - t0
    t0 = time.perf_counter()
    f_c = get_backend("compiled").evaluate_batch(desc, xs)
    t_c = time.perf_counter() - t0
    same = np.array_equal(f_py, f_c)
    label = "f4m-wfg1 m=50 batch eval"
    print(f"{label:<34} {len(xs) / t_py:>10.0f}/s {len(xs) / t_c:>10.0f}/s "
          f"{t_py / t_c:>8.1f}x  {same}")
    return 0 if same else 1


if __name__ == "__main__":
    raise SystemExit(main())
