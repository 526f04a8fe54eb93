"""Result-file formats: trace.csv, set.tsv, weights.txt, summary.json.

* trace.csv -- header ``evals,gws``, one row per log point, floats at 17
  significant digits so reruns are byte-identical and values round-trip
  exactly.
* set.tsv -- one solution per row: the decision values (space-separated),
  one tab, the objective values (space-separated).
* summary.json -- config echo, per-seed finals, mean/std/min/max, wall clock.

Writers re-validate the non-increasing-gws contract so a broken trace can
never reach disk silently.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

__all__ = [
    "format_float",
    "write_trace",
    "read_trace",
    "write_set",
    "read_set",
    "write_summary",
    "read_summary",
    "validate_trace",
]


def format_float(v: float) -> str:
    return f"{v:.17g}"


def validate_trace(trace) -> None:
    if len(trace) == 0:
        raise ValueError("empty trace")
    prev = None
    for evals, g in trace:
        if prev is not None and g > prev:
            raise ValueError(f"trace is increasing at evals={evals}: {g} > {prev}")
        prev = g


def write_trace(path, trace) -> None:
    validate_trace(trace)
    path = Path(path)
    lines = ["evals,gws"]
    for evals, g in trace:
        lines.append(f"{evals},{format_float(g)}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_trace(path) -> list[tuple[int, float]]:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0].strip() != "evals,gws":
        raise ValueError(f"{path}: malformed trace header")
    out = []
    for ln in lines[1:]:
        if not ln.strip():
            continue
        evals_s, g_s = ln.split(",")
        out.append((int(evals_s), float(g_s)))
    return out


def write_set(path, decisions: np.ndarray, objectives: np.ndarray) -> None:
    decisions = np.atleast_2d(np.asarray(decisions, dtype=np.float64))
    objectives = np.atleast_2d(np.asarray(objectives, dtype=np.float64))
    if len(decisions) != len(objectives):
        raise ValueError("decision/objective row counts differ")
    lines = []
    for x, f in zip(decisions, objectives):
        lines.append(
            " ".join(format_float(v) for v in x)
            + "\t"
            + " ".join(format_float(v) for v in f)
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_set(path) -> tuple[np.ndarray, np.ndarray]:
    """Returns (decisions, objectives) from a set.tsv population file."""
    decisions, objectives = [], []
    for ln in Path(path).read_text(encoding="utf-8").splitlines():
        if not ln.strip():
            continue
        try:
            dec_s, obj_s = ln.split("\t")
        except ValueError:
            raise ValueError(f"{path}: expected '<decisions>\\t<objectives>' rows") from None
        decisions.append([float(v) for v in dec_s.split()])
        objectives.append([float(v) for v in obj_s.split()])
    if not objectives:
        raise ValueError(f"{path}: empty population file")
    return (
        np.asarray(decisions, dtype=np.float64),
        np.asarray(objectives, dtype=np.float64),
    )


def write_summary(path, summary: dict) -> None:
    Path(path).write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def read_summary(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))
