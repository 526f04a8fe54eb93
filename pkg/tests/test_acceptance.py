"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; the whole module finishes in well under a minute with the compiled
engine.
"""

import time
from pathlib import Path

import numpy as np

from f4m.algorithm import RunConfig, fast_removal, naive_removal, run_som_emoa
from f4m.core import SolutionSet, gws
from f4m.harness import ExperimentConfig, dump_config, run_experiment
from f4m.harness.cli import main as cli_main
from f4m.problems import make_problem, make_weights, nmlr_make, r2_indicator
import f4m.problems as problems


def report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_removal_oracle_equivalence():
    """fast_removal vs naive_removal on 10,000 seeded random instances."""
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(10_000):
        m = int(rng.integers(5, 101))
        k = int(rng.integers(2, 11))
        pop_f = rng.random((k, m))
        off_f = rng.random(m)
        u_rem = rng.random()
        v = np.minimum.reduce(pop_f, axis=0)
        r_f, v_f = fast_removal(pop_f, v, off_f, u_rem)
        r_n, v_n = naive_removal(pop_f, v, off_f, u_rem)
        if r_f != r_n or not np.array_equal(v_f, v_n):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    report(
        "removal-oracle equivalence",
        mismatches == 0 and elapsed < 10.0,
        f"0 mismatches required, got {mismatches}; {elapsed:.2f}s (< 10 s)",
    )


def test_monotonicity_suite():
    """Every trace from >= 50 runs is non-increasing in gws."""
    violations = 0
    runs = 0
    for pname, pkw in [
        ("f4m-dtlz1", dict(m=10, q=3)),
        ("f4m-dtlz2", dict(m=12, q=3)),
        ("f4m-wfg1", dict(m=8, q=3)),
        ("f4m-wfg4", dict(m=8, q=3)),
        ("nmlr", dict(m=10, d=10, k_star=3, sigma=0.1)),
    ]:
        for flags in (
            {},
            {"use_archive": False},
            {"use_probability_p": False},
        ):
            for seed in range(4):
                prob = make_problem(pname, weight_seed=seed, **pkw) \
                    if pname != "nmlr" else make_problem(pname, seed=seed, **pkw)
                cfg = RunConfig(k=3, eval_budget=3_000, init_sample_n=150,
                                seed=seed, log_every=150, **flags)
                trace = run_som_emoa(prob, cfg).trace
                runs += 1
                gs = [g for _, g in trace]
                violations += sum(1 for a, b in zip(gs, gs[1:]) if b > a)
    report(
        "monotonicity suite",
        runs >= 50 and violations == 0,
        f"{runs} runs (>= 50), {violations} violations (must be 0)",
    )


def test_archive_ideal_coherence():
    """Debug mode: u equals the full-history component-wise minimum after
    every generation of 10 full runs (exact equality)."""
    total_violations = 0
    for seed in range(10):
        prob = make_problem("f4m-dtlz2", m=25, q=3, weight_seed=seed)
        cfg = RunConfig(k=5, eval_budget=60_000, seed=seed, debug=True)
        total_violations += run_som_emoa(prob, cfg).debug_violations
    report(
        "archive/ideal coherence",
        total_violations == 0,
        f"10 full debug runs, {total_violations} generations with u != history min",
    )


def test_r2_identity():
    """|gws(transformed set)/m - R2(base set)| < 1e-12 on 100 seeded pairs."""
    rng = np.random.default_rng(99)
    base = make_problem("dtlz2", q=3)
    worst = 0.0
    for trial in range(100):
        m = int(rng.integers(2, 60))
        ws = make_weights("uniform_simplex", m, 3, seed=trial)
        prob = problems.f4m_transform(base, ws)
        xs = rng.random((int(rng.integers(1, 7)), 12))
        base_set = SolutionSet.from_objectives([base.evaluate(x) for x in xs])
        transformed = SolutionSet.from_objectives([prob.evaluate(x) for x in xs])
        err = abs(gws(transformed) / m - r2_indicator(base_set, ws, np.zeros(3)))
        worst = max(worst, err)
    report("R2 identity", worst < 1e-12, f"max |gws/m - R2| = {worst:.2e} (< 1e-12)")


def _worked_example_oracle():
    """Brute-force optimum for the 2-objective worked example: 10^4-point
    angle grid, exhaustive best-3-subset via interval partition over sorted
    angles (each coverage objective is V-shaped in the angle, so the optimal
    objective-to-point assignment is contiguous; verified against full
    enumeration on a coarse grid below)."""
    W = make_weights("equispaced_2d", 10, 2).vectors
    m = 10

    def costs(n):
        theta = np.linspace(0.0, np.pi / 2.0, n)
        front = np.column_stack([np.cos(theta), np.sin(theta)])
        return theta, np.max(W[None, :, :] * front[:, None, :], axis=2)

    def dp_best(C):
        pref = np.cumsum(C, axis=1)
        def group(a, b):  # best single point serving objectives a..b
            s = pref[:, b] - (pref[:, a - 1] if a > 0 else 0.0)
            return s.min(), int(np.argmin(s))
        best, cuts = np.inf, None
        for c1 in range(0, m - 2):
            for c2 in range(c1 + 1, m - 1):
                val = group(0, c1)[0] + group(c1 + 1, c2)[0] + group(c2 + 1, m - 1)[0]
                if val < best:
                    best, cuts = val, (c1, c2)
        idx = [group(0, cuts[0])[1], group(cuts[0] + 1, cuts[1])[1],
               group(cuts[1] + 1, m - 1)[1]]
        return best, idx

    # oracle-of-the-oracle: DP equals full 3-subset enumeration on a 120 grid
    from itertools import combinations

    _, C_small = costs(120)
    dp_small, _ = dp_best(C_small)
    exhaustive = min(
        np.minimum(np.minimum(C_small[i], C_small[j]), C_small[l]).sum()
        for i, j, l in combinations(range(120), 3)
    )
    assert abs(dp_small - exhaustive) < 1e-12

    theta, C = costs(10_000)
    best, idx = dp_best(C)
    return best, np.degrees(theta[idx])


def test_worked_example_optimum():
    """2-objective DTLZ2, m=10 equispaced weights, k=3, 20k evaluations,
    10 seeds: every run within 2% of the brute-force oracle optimum, and the
    selected points sit where the oracle puts them on the arc."""
    t0 = time.perf_counter()
    oracle, oracle_deg = _worked_example_oracle()
    prob = make_problem("f4m-dtlz2", m=10, q=2, weight_method="equispaced_2d")
    base = prob.base
    worst_rel = 0.0
    angle_ok = True
    mirror = np.sort(90.0 - oracle_deg)
    for seed in range(10):
        r = run_som_emoa(prob, RunConfig(k=3, eval_budget=20_000, seed=seed))
        worst_rel = max(worst_rel, r.final_gws() / oracle - 1.0)
        bf = np.array([base.evaluate(x) for x in r.final.decisions_array()])
        deg = np.sort(np.degrees(np.arctan2(bf[:, 1], bf[:, 0])))
        near = min(np.max(np.abs(deg - np.sort(oracle_deg))),
                   np.max(np.abs(deg - mirror)))
        if near > 6.0:
            angle_ok = False
    elapsed = time.perf_counter() - t0
    report(
        "worked-example optimum",
        worst_rel < 0.02 and angle_ok and elapsed < 30.0,
        f"oracle={oracle:.6f} at {np.round(oracle_deg, 1)} deg; worst run "
        f"+{100 * worst_rel:.3f}% (< 2%); arc positions within 6 deg of the "
        f"oracle's; {elapsed:.1f}s (< 30 s)",
    )


def _table2(name: str, m: int, target: float) -> tuple[float, float, bool]:
    t0 = time.perf_counter()
    finals = []
    for seed in range(10):
        prob = make_problem(name, m=m, q=3, weight_seed=seed)
        finals.append(
            run_som_emoa(prob, RunConfig(k=5, eval_budget=60_000, seed=seed)).final_gws()
        )
    mean = float(np.mean(finals))
    elapsed = time.perf_counter() - t0
    ok = 0.95 * target <= mean <= 1.05 * target and elapsed < 120.0
    return mean, elapsed, ok


def test_table2_f4m_dtlz2():
    """Mean over 10 seeds within 5% of the reported 2.3770 (m=25, k=5)."""
    mean, elapsed, ok = _table2("f4m-dtlz2", 25, 2.3770)
    report(
        "Table II reproduction, F4M-DTLZ2",
        ok,
        f"mean gws = {mean:.4f}, target 2.3770 +-5% "
        f"[{0.95 * 2.3770:.4f}, {1.05 * 2.3770:.4f}]; {elapsed:.1f}s (< 120 s)",
    )


def test_table2_f4m_dtlz1():
    """Mean over 10 seeds within 5% of the reported 2.0601 (m=50, k=5)."""
    mean, elapsed, ok = _table2("f4m-dtlz1", 50, 2.0601)
    report(
        "Table II reproduction, F4M-DTLZ1",
        ok,
        f"mean gws = {mean:.4f}, target 2.0601 +-5% "
        f"[{0.95 * 2.0601:.4f}, {1.05 * 2.0601:.4f}]; {elapsed:.1f}s (< 120 s)",
    )


def test_ablation_direction():
    """F4M-DTLZ4 (m=50, k=5, 10 seeds): the archive buys >= 10%, and the
    probability vector costs at most 2%."""
    means = {}
    for label, flags in [
        ("full", {}),
        ("no_archive", {"use_archive": False}),
        ("no_p", {"use_probability_p": False}),
    ]:
        finals = []
        for seed in range(10):
            prob = make_problem("f4m-dtlz4", m=50, q=3, weight_seed=seed)
            cfg = RunConfig(k=5, eval_budget=60_000, seed=seed, **flags)
            finals.append(run_som_emoa(prob, cfg).final_gws())
        means[label] = float(np.mean(finals))
    archive_ok = means["full"] <= 0.90 * means["no_archive"]
    p_ok = means["full"] <= 1.02 * means["no_p"]
    report(
        "ablation direction (Table IV)",
        archive_ok and p_ok,
        f"full={means['full']:.4f}, no-archive={means['no_archive']:.4f} "
        f"(need full <= 90%), no-p={means['no_p']:.4f} (need full <= 102%)",
    )


def test_nonreproducible_results_declared(tmp_path):
    """Table I (DC-MaTS, NMLR) and Table III (DDMOP) absolute values are NOT
    reproducible from this paper alone: DC-MaTS and DDMOP definitions live in
    external references and NMLR's construction is under-specified.
    Substituted property acceptance below."""
    # NMLR zero-noise ground-truth coverage is exactly 0
    exact_zero = True
    for seed in range(5):
        inst = nmlr_make(m=25, d=10, k_star=5, sigma=0.0, seed=seed)
        rows = [inst.evaluate(x) for x in inst.ground_truth]
        if gws(SolutionSet.from_objectives(rows)) != 0.0:
            exact_zero = False
    # NMLR seeded determinism
    a = nmlr_make(m=25, d=10, k_star=5, sigma=0.1, seed=3)
    b = nmlr_make(m=25, d=10, k_star=5, sigma=0.1, seed=3)
    deterministic = np.array_equal(a.task_a, b.task_a) and np.array_equal(
        a.task_b, b.task_b
    )

    # plug-in problem interface round-trips through the full harness
    from f4m.problems.base import ProblemSpec

    class Anchors:
        spec = ProblemSpec("acceptance-anchors", m=8, d=3, bounds=((0.0, 1.0),) * 3)
        cs = np.linspace(0.1, 0.9, 8)

        def evaluate(self, x):
            return np.array([float(np.sum((x - c) ** 2)) for c in self.cs])

    if "acceptance-anchors" not in problems.list_problems():
        problems.register("acceptance-anchors", lambda **kw: Anchors())
    cfg = ExperimentConfig(
        problem="acceptance-anchors", k=3, evals=900, init_size=90,
        log_every=100, reps=2, out=str(tmp_path / "plugin"),
    )
    recs1 = run_experiment(cfg)
    recs2 = run_experiment(cfg)
    plugin_ok = (
        len(recs1) == 2
        and [r.trace for r in recs1] == [r.trace for r in recs2]
        and all(r.trace[-1][1] <= r.trace[0][1] for r in recs1)
    )
    report(
        "non-reproducible results, declared",
        exact_zero and deterministic and plugin_ok,
        "Table I/III absolutes declared non-reproducible; substituted checks: "
        f"NMLR zero-noise gws==0 exactly: {exact_zero}; seeded determinism: "
        f"{deterministic}; plug-in harness round-trip: {plugin_ok}",
    )


def test_bench_determinism(tmp_path):
    """Two bench invocations with identical config produce byte-identical
    trace.csv files."""
    ini = tmp_path / "exp.ini"
    cfg = ExperimentConfig(
        problem="f4m-dtlz2", m=12, q=3, k=3, evals=3_000, init_size=150,
        log_every=300, reps=3, seed_base=0, out=str(tmp_path / "bench"),
    )
    ini.write_text(dump_config(cfg), encoding="utf-8")
    assert cli_main(["bench", "--config", str(ini)]) == 0
    traces1 = {
        p.relative_to(tmp_path): p.read_bytes()
        for p in Path(cfg.out).glob("*/seed_*/trace.csv")
    }
    assert cli_main(["bench", "--config", str(ini)]) == 0
    traces2 = {
        p.relative_to(tmp_path): p.read_bytes()
        for p in Path(cfg.out).glob("*/seed_*/trace.csv")
    }
    ok = len(traces1) == 3 and traces1 == traces2
    report(
        "bench determinism",
        ok,
        f"{len(traces1)} trace files, byte-identical across invocations: {ok}",
    )
