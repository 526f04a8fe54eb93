"""Compiled-vs-Python engine equivalence: the two must agree bit for bit."""

import numpy as np
import pytest

from f4m.algorithm import RunConfig, run_som_emoa
from f4m.algorithm.backend import available_backends, get_backend
from f4m.algorithm.descriptor import EvalDescriptor
from f4m.problems import make_problem
from f4m.problems.base import ProblemSpec

pytestmark = pytest.mark.skipif(
    "compiled" not in available_backends(), reason="compiled kernels not built"
)

PROBLEMS = [
    ("dtlz1", dict(q=3)),
    ("dtlz4", dict(q=3)),
    ("wfg1", dict(q=3)),
    ("wfg2", dict(q=2)),
    ("wfg3", dict(q=3)),
    ("wfg4", dict(q=3)),
    ("f4m-dtlz2", dict(m=14, q=3, weight_seed=4)),
    ("f4m-wfg1", dict(m=9, q=3, weight_seed=1)),
    ("nmlr", dict(m=12, d=10, k_star=3, sigma=0.1, seed=2)),
]


@pytest.mark.parametrize("name,params", PROBLEMS)
def test_batch_evaluation_is_bit_identical(name, params):
    prob = make_problem(name, **params)
    desc = EvalDescriptor(prob)
    rng = np.random.default_rng(0)
    xs = desc.lo + rng.random((64, desc.d)) * (desc.hi - desc.lo)
    fc = get_backend("compiled").evaluate_batch(desc, xs)
    fp = get_backend("python").evaluate_batch(desc, xs)
    assert np.array_equal(fc, fp)


def test_compiled_batch_matches_public_evaluate():
    prob = make_problem("f4m-dtlz2", m=8, q=3, weight_seed=0)
    desc = EvalDescriptor(prob)
    rng = np.random.default_rng(1)
    xs = rng.random((16, 12))
    fc = get_backend("compiled").evaluate_batch(desc, xs)
    direct = np.array([prob.evaluate(x) for x in xs])
    assert np.array_equal(fc, direct)


@pytest.mark.parametrize(
    "name,params",
    [
        ("f4m-dtlz1", dict(m=11, q=3, weight_seed=3)),
        ("f4m-dtlz2", dict(m=9, q=3, weight_seed=0)),
        ("f4m-wfg1", dict(m=7, q=3, weight_seed=2)),
        ("f4m-wfg3", dict(m=7, q=3, weight_seed=2)),
        ("nmlr", dict(m=10, d=10, k_star=3, sigma=0.1, seed=5)),
        ("wfg4", dict(q=3)),
    ],
)
def test_full_runs_are_bit_identical_across_engines(name, params):
    prob = make_problem(name, **params)
    cfg = RunConfig(k=3, eval_budget=1_500, init_sample_n=90, seed=11,
                    log_every=150, debug=True)
    rc = run_som_emoa(prob, cfg, backend="compiled")
    rp = run_som_emoa(prob, cfg, backend="python")
    assert rc.trace == rp.trace
    assert rc.final == rp.final
    assert rc.debug_violations == rp.debug_violations == 0


def test_ablation_runs_agree_across_engines():
    prob = make_problem("f4m-dtlz4", m=10, q=3, weight_seed=1)
    for flags in (dict(use_archive=False), dict(use_probability_p=False)):
        cfg = RunConfig(k=3, eval_budget=1_000, init_sample_n=80, seed=2,
                        log_every=100, **flags)
        rc = run_som_emoa(prob, cfg, backend="compiled")
        rp = run_som_emoa(prob, cfg, backend="python")
        assert rc.trace == rp.trace
        assert rc.final == rp.final


def test_plugin_callback_path_agrees_across_engines():
    class Quad:
        spec = ProblemSpec("quad", m=5, d=3, bounds=((-1.0, 1.0),) * 3)
        centers = np.linspace(-0.9, 0.9, 5)

        def evaluate(self, x):
            return (x.sum() - self.centers) ** 2

    cfg = RunConfig(k=2, eval_budget=500, init_sample_n=50, seed=1, log_every=50)
    rc = run_som_emoa(Quad(), cfg, backend="compiled")
    rp = run_som_emoa(Quad(), cfg, backend="python")
    assert rc.trace == rp.trace
    assert rc.final == rp.final


@pytest.mark.parametrize("backend", ["compiled", "python"])
def test_documented_draw_count_per_generation(backend):
    """Each generation consumes exactly 4 + 5d uniforms from the stream,
    independent of the data (the cross-engine bit-identity relies on it)."""
    from f4m.algorithm import ops

    prob = make_problem("f4m-dtlz2", m=7, q=3, weight_seed=0)
    desc = EvalDescriptor(prob)
    d, m, k, gens = desc.d, desc.m, 3, 57
    rng = np.random.default_rng(123)
    twin = np.random.default_rng(123)

    sample_x = desc.lo + rng.random((20, d)) * (desc.hi - desc.lo)
    be = get_backend(backend)
    sample_f = be.evaluate_batch(desc, sample_x)
    arch_x, arch_f, u = ops.archive_init_arrays(sample_x, sample_f)
    pop_x = np.ascontiguousarray(sample_x[:k])
    pop_f = np.ascontiguousarray(sample_f[:k])
    v = pop_f.min(axis=0).copy()
    be.run_generations(desc, pop_x, pop_f, v, arch_x, arch_f, u,
                       np.empty(0), rng, gens, 20.0, 20.0, 1.0, 1.0 / d,
                       True, True, False)

    twin.random((20, d))
    twin.random(gens * (4 + 5 * d))
    assert rng.bit_generator.state == twin.bit_generator.state


def test_env_var_override(monkeypatch):
    from f4m.algorithm import backend as backend_mod

    monkeypatch.setenv("F4M_BACKEND", "python")
    assert backend_mod.default_backend_name() == "python"
    monkeypatch.setenv("F4M_BACKEND", "nonsense")
    with pytest.raises(RuntimeError, match="F4M_BACKEND"):
        backend_mod.default_backend_name()
