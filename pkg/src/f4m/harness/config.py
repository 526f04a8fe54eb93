"""Experiment configuration: plain-text INI documents with [problem],
[algorithm] and [experiment] sections, every field overridable from the CLI.

The resolved configuration is echoed into the output directory for
provenance, and a fingerprint (sha256 over the run-defining fields, first 12
hex digits) names the output subdirectory: replaying (fingerprint, seed)
reproduces a trace bit-exactly.

``weight_seed`` seeds the problem-instance randomness (weight sampling for
the transformed suites, task generation for NMLR).  Left unset, each
repetition draws its own instance seeded by the run seed, which is how the
reported benchmark means average over the instance distribution; set it to
pin one instance for all repetitions.
"""

from __future__ import annotations

import configparser
import hashlib
import io
from dataclasses import dataclass, fields, replace

__all__ = ["ExperimentConfig", "load_config", "dump_config", "fingerprint"]

ALGORITHMS = (
    "som_emoa",
    "som_emoa_no_archive",
    "som_emoa_no_p",
    "som_emoa_no_archive_no_p",
    "random_search",
)

WEIGHT_METHOD_ALIASES = {
    "uniform": "uniform_simplex",
    "uniform_simplex": "uniform_simplex",
    "das-dennis": "das_dennis",
    "das_dennis": "das_dennis",
    "equispaced-2d": "equispaced_2d",
    "equispaced_2d": "equispaced_2d",
}


@dataclass(frozen=True)
class ExperimentConfig:
    # [problem]
    problem: str = "f4m-dtlz2"
    m: int | None = None
    q: int | None = None
    d: int | None = None
    k_star: int | None = None
    sigma: float | None = None
    weight_method: str = "uniform_simplex"
    weight_seed: int | None = None
    lattice_h: int | None = None
    # [algorithm]
    algorithm: str = "som_emoa"
    k: int = 5
    evals: int = 60_000
    init_size: int = 600
    eta_c: float = 20.0
    eta_m: float = 20.0
    p_c: float = 1.0
    p_m: float | None = None
    log_every: int = 600
    # [experiment]
    reps: int = 1
    seed_base: int = 0
    out: str = "results"
    threads: int = 1
    backend: str | None = None

    def validated(self) -> "ExperimentConfig":
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; known: {ALGORITHMS}")
        if self.weight_method not in WEIGHT_METHOD_ALIASES.values():
            raise ValueError(f"unknown weight method {self.weight_method!r}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.evals < self.init_size:
            raise ValueError("evals must be >= init_size")
        return self

    def problem_params(self, seed: int) -> dict:
        """Keyword arguments for the problem factory of one repetition."""
        name = self.problem
        params: dict = {}
        instance_seed = self.weight_seed if self.weight_seed is not None else seed
        if name.startswith("f4m-"):
            if self.m is None:
                raise ValueError(f"problem {name!r} needs m")
            params["m"] = self.m
            if self.q is not None:
                params["q"] = self.q
            params["weight_method"] = self.weight_method
            params["weight_seed"] = instance_seed
            if self.lattice_h is not None:
                params["lattice_h"] = self.lattice_h
        elif name == "nmlr":
            if self.m is None:
                raise ValueError("nmlr needs m")
            params["m"] = self.m
            if self.d is not None:
                params["d"] = self.d
            params["k_star"] = self.k_star if self.k_star is not None else self.k
            if self.sigma is not None:
                params["sigma"] = self.sigma
            params["seed"] = instance_seed
        else:
            # raw or plug-in problems: pass only what was set
            if self.m is not None:
                params["m"] = self.m
            if self.q is not None:
                params["q"] = self.q
            if self.d is not None:
                params["d"] = self.d
        return params

    def run_flags(self) -> dict:
        return {
            "use_archive": "no_archive" not in self.algorithm,
            "use_probability_p": "no_p" not in self.algorithm,
        }


_SECTIONS = {
    "problem": (
        "problem", "m", "q", "d", "k_star", "sigma",
        "weight_method", "weight_seed", "lattice_h",
    ),
    "algorithm": (
        "algorithm", "k", "evals", "init_size", "eta_c", "eta_m",
        "p_c", "p_m", "log_every",
    ),
    "experiment": ("reps", "seed_base", "out", "threads", "backend"),
}
# fields whose names differ from their INI keys
_KEY_IN_FILE = {"problem": "name", "algorithm": "name"}
_INT_FIELDS = {
    "m", "q", "d", "k_star", "weight_seed", "lattice_h", "k", "evals",
    "init_size", "log_every", "reps", "seed_base", "threads",
}
_FLOAT_FIELDS = {"sigma", "eta_c", "eta_m", "p_c", "p_m"}


def load_config(path, overrides: dict | None = None) -> ExperimentConfig:
    parser = configparser.ConfigParser()
    with open(path, "r", encoding="utf-8") as fh:
        parser.read_file(fh)
    values: dict = {}
    for section, keys in _SECTIONS.items():
        if not parser.has_section(section):
            continue
        for f_name in keys:
            key = _KEY_IN_FILE.get(f_name, f_name)
            if not parser.has_option(section, key):
                continue
            raw = parser.get(section, key)
            values[f_name] = _coerce(f_name, raw)
    cfg = ExperimentConfig(**values)
    if overrides:
        cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    if cfg.weight_method in WEIGHT_METHOD_ALIASES:
        cfg = replace(cfg, weight_method=WEIGHT_METHOD_ALIASES[cfg.weight_method])
    return cfg.validated()


def _coerce(field_name: str, raw: str):
    raw = raw.strip()
    if raw.lower() in ("none", ""):
        return None
    if field_name in _INT_FIELDS:
        return int(raw)
    if field_name in _FLOAT_FIELDS:
        return float(raw)
    return raw


def dump_config(cfg: ExperimentConfig) -> str:
    """Resolved config as INI text (the provenance echo)."""
    parser = configparser.ConfigParser()
    for section, keys in _SECTIONS.items():
        parser.add_section(section)
        for f_name in keys:
            val = getattr(cfg, f_name)
            if val is None:
                continue
            parser.set(section, _KEY_IN_FILE.get(f_name, f_name), str(val))
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def fingerprint(cfg: ExperimentConfig) -> str:
    """12-hex-digit digest of the run-defining fields.

    Excludes output location, thread count, backend (engines are
    bit-identical), repetition count and seed base: a (fingerprint, seed)
    pair fully determines a run's trace.
    """
    skip = {"out", "threads", "backend", "reps", "seed_base"}
    parts = []
    for f in fields(ExperimentConfig):
        if f.name in skip:
            continue
        parts.append(f"{f.name}={getattr(cfg, f.name)!r}")
    digest = hashlib.sha256(";".join(parts).encode()).hexdigest()
    return digest[:12]
