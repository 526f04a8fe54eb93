"""Experiment harness: config parsing, seeded multi-run execution,
convergence logging, result persistence, and summary statistics."""

from .config import ExperimentConfig, dump_config, fingerprint, load_config
from .io import read_set, read_summary, read_trace, validate_trace, write_set, write_trace
from .runner import RunRecord, run_experiment, run_single, summarize

__all__ = [
    "ExperimentConfig",
    "load_config",
    "dump_config",
    "fingerprint",
    "RunRecord",
    "run_experiment",
    "run_single",
    "summarize",
    "read_trace",
    "write_trace",
    "read_set",
    "write_set",
    "read_summary",
    "validate_trace",
]
