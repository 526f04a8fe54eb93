"""Problem construction: base benchmarks, the R2-based transform, and a
string-keyed registry so harness configs and plug-ins resolve by name.

Built-in names: ``dtlz1..4`` / ``wfg1..4`` (raw q-objective forms),
``f4m-dtlz1..4`` / ``f4m-wfg1..4`` (transformed coverage instances), and
``nmlr``.  Any object exposing ``(spec, evaluate)`` can be registered under a
new name without touching this package.
"""

from __future__ import annotations

from typing import Callable

from .base import Problem, ProblemSpec
from .dtlz import DTLZProblem, dtlz_dimension, dtlz_eval
from .nmlr import NMLRInstance, nmlr_eval, nmlr_make
from .transform import F4MProblem, f4m_transform, r2_indicator
from .weights import WeightSet, das_dennis_count, load_weights, make_weights, save_weights
from .wfg import WFGProblem, wfg_dimension, wfg_eval

__all__ = [
    "Problem",
    "ProblemSpec",
    "DTLZProblem",
    "WFGProblem",
    "NMLRInstance",
    "F4MProblem",
    "WeightSet",
    "dtlz_eval",
    "wfg_eval",
    "nmlr_make",
    "nmlr_eval",
    "f4m_transform",
    "r2_indicator",
    "make_weights",
    "save_weights",
    "load_weights",
    "das_dennis_count",
    "dtlz_dimension",
    "wfg_dimension",
    "register",
    "make_problem",
    "list_problems",
]

_REGISTRY: dict[str, Callable[..., Problem]] = {}


def register(name: str, factory: Callable[..., Problem], overwrite: bool = False) -> None:
    """Register a problem factory under ``name``.

    The factory receives the keyword parameters passed to
    :func:`make_problem` and must return an object with ``spec`` and
    ``evaluate``.
    """
    if name in _REGISTRY and not overwrite:
        raise ValueError(f"problem {name!r} already registered")
    _REGISTRY[name] = factory


def make_problem(name: str, **params) -> Problem:
    try:
        factory = _REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"unknown problem {name!r}; known: {', '.join(sorted(_REGISTRY))}"
        ) from None
    return factory(**params)


def list_problems() -> list[str]:
    return sorted(_REGISTRY)


def _weights_for(
    m: int,
    q: int,
    weight_method: str = "uniform_simplex",
    weight_seed: int = 0,
    lattice_h: int | None = None,
    weight_set: WeightSet | None = None,
) -> WeightSet:
    if weight_set is not None:
        return weight_set
    return make_weights(weight_method, m, q, seed=weight_seed, h=lattice_h)


def _make_f4m_dtlz(variant: int):
    def factory(m: int, q: int = 3, **kw) -> F4MProblem:
        return f4m_transform(DTLZProblem(variant, q), _weights_for(m, q, **kw))

    return factory


def _make_f4m_wfg(variant: int):
    def factory(m: int, q: int = 3, **kw) -> F4MProblem:
        return f4m_transform(WFGProblem(variant, q), _weights_for(m, q, **kw))

    return factory


for _v in (1, 2, 3, 4):
    register(f"dtlz{_v}", (lambda v: lambda q=3: DTLZProblem(v, q))(_v))
    register(f"wfg{_v}", (lambda v: lambda q=3: WFGProblem(v, q))(_v))
    register(f"f4m-dtlz{_v}", _make_f4m_dtlz(_v))
    register(f"f4m-wfg{_v}", _make_f4m_wfg(_v))

register("nmlr", nmlr_make)
