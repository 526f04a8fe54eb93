"""Command-line interface.

Subcommands:

* ``f4m run``            one seeded run, files under <out>/<fingerprint>/seed_<s>/
* ``f4m bench``          full experiment from an INI config file (flags override)
* ``f4m select``         greedy k-subset over a set.tsv population file
* ``f4m list-problems``  registered problem names
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

import numpy as np

from ..problems import list_problems
from ..selection import greedy_subset_indices
from .config import WEIGHT_METHOD_ALIASES, ExperimentConfig, fingerprint, load_config
from .runner import run_experiment, summarize
from . import io as hio


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", help="registered problem name (see list-problems)")
    p.add_argument("--m", type=int, help="number of objectives")
    p.add_argument("--q", type=int, help="base objective count for transformed problems")
    p.add_argument("--d", type=int, help="decision dimension (nmlr)")
    p.add_argument("--k", type=int, help="solution-set size")
    p.add_argument("--evals", type=int, help="total evaluation budget")
    p.add_argument("--seed", type=int, dest="seed_base", help="base run seed")
    p.add_argument("--init-size", type=int, dest="init_size", help="initial random sample size")
    p.add_argument("--weights", choices=sorted(WEIGHT_METHOD_ALIASES),
                   dest="weight_method", help="weight generation method")
    p.add_argument("--weight-seed", type=int, dest="weight_seed",
                   help="pin the problem-instance seed (default: per-repetition)")
    p.add_argument("--lattice-h", type=int, dest="lattice_h",
                   help="simplex-lattice divisions for das-dennis")
    p.add_argument("--sigma", type=float, help="NMLR noise std")
    p.add_argument("--k-star", type=int, dest="k_star", help="NMLR latent model count")
    p.add_argument("--reps", type=int, help="number of repetitions")
    p.add_argument("--out", help="output directory")
    p.add_argument("--threads", type=int, help="worker pool size")
    p.add_argument("--log-every", type=int, dest="log_every",
                   help="evaluations between trace points")
    p.add_argument("--algorithm", choices=("som_emoa", "random_search"),
                   help="search algorithm")
    p.add_argument("--no-archive", action="store_true",
                   help="ablation: mate within the population only")
    p.add_argument("--no-p", action="store_true",
                   help="ablation: uniform archive-slot selection")
    p.add_argument("--backend", choices=("compiled", "python"), help="engine override")


def _overrides(args: argparse.Namespace) -> dict:
    keys = (
        "problem", "m", "q", "d", "k", "evals", "seed_base", "init_size",
        "weight_method", "weight_seed", "lattice_h", "sigma", "k_star",
        "reps", "out", "threads", "log_every", "backend",
    )
    ov = {k: getattr(args, k, None) for k in keys}
    if ov.get("weight_method"):
        ov["weight_method"] = WEIGHT_METHOD_ALIASES[ov["weight_method"]]
    # only override the algorithm when a flag actually asks for it, so a
    # config file's algorithm survives an unrelated `bench` invocation
    algo = getattr(args, "algorithm", None)
    no_archive = getattr(args, "no_archive", False)
    no_p = getattr(args, "no_p", False)
    if no_archive or no_p:
        if algo not in (None, "som_emoa"):
            raise ValueError("--no-archive/--no-p only modify som_emoa")
        suffix = "_no_archive_no_p" if (no_archive and no_p) else (
            "_no_archive" if no_archive else "_no_p")
        ov["algorithm"] = "som_emoa" + suffix
    else:
        ov["algorithm"] = algo
    return ov


def _cmd_run(args) -> int:
    ov = _overrides(args)
    cfg = ExperimentConfig(**{k: v for k, v in ov.items() if v is not None})
    cfg = replace(cfg, reps=1).validated()
    records = run_experiment(cfg)
    rec = records[0]
    print(f"fingerprint: {rec.fingerprint}")
    print(f"seed {rec.seed}: final gws = {hio.format_float(rec.final_gws)} "
          f"({rec.duration:.2f}s)")
    print(f"outputs under {cfg.out}/{rec.fingerprint}/seed_{rec.seed}/")
    return 0


def _cmd_bench(args) -> int:
    cfg = load_config(args.config, overrides=_overrides(args))
    records = run_experiment(cfg)
    stats = summarize(records)[0]
    print(f"fingerprint: {fingerprint(cfg)}")
    print(f"{cfg.problem} m={cfg.m} k={cfg.k} algo={cfg.algorithm} reps={cfg.reps}")
    print(
        f"final gws: mean={stats['mean']:.6g} std={stats['std']:.3g} "
        f"min={stats['min']:.6g} max={stats['max']:.6g}"
    )
    return 0


def _cmd_select(args) -> int:
    decisions, objectives = hio.read_set(args.population)
    idx = greedy_subset_indices(objectives, args.k)
    sel_x, sel_f = decisions[idx], objectives[idx]
    if args.out:
        hio.write_set(args.out, sel_x, sel_f)
        print(f"wrote {len(idx)} solutions to {args.out}")
    else:
        for x, f in zip(sel_x, sel_f):
            print(" ".join(hio.format_float(v) for v in x) + "\t"
                  + " ".join(hio.format_float(v) for v in f))
    g = float(np.minimum.reduce(sel_f).sum())
    print(f"selected indices: {idx}", file=sys.stderr)
    print(f"gws of selection: {hio.format_float(g)}", file=sys.stderr)
    return 0


def _cmd_list_problems(_args) -> int:
    for name in list_problems():
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="f4m", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="single seeded run")
    _add_run_flags(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_bench = sub.add_parser("bench", help="full experiment from a config file")
    p_bench.add_argument("--config", required=True, help="INI experiment config")
    _add_run_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_sel = sub.add_parser("select", help="greedy subset over a population file")
    p_sel.add_argument("--population", required=True, help="set.tsv population file")
    p_sel.add_argument("--k", type=int, required=True, help="subset size")
    p_sel.add_argument("--out", help="write selection to this set.tsv path")
    p_sel.set_defaults(func=_cmd_select)

    p_list = sub.add_parser("list-problems", help="registered problem names")
    p_list.set_defaults(func=_cmd_list_problems)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
