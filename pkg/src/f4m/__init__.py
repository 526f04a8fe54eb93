"""Few-for-many (F4M) optimization toolkit.

Find a small set of k solutions that collectively cover m objectives, each
objective scored by its best set member.  Ships the SoM-EMOA evolutionary
algorithm, an R2-based generator that turns standard multi-objective problems
into many-objective coverage instances, greedy subset selection, and a
reproducible experiment harness.
"""

from .algorithm import (
    RunConfig,
    RunResult,
    available_backends,
    default_backend_name,
    run_som_emoa,
)
from .core import (
    DecisionVector,
    EvaluatedSolution,
    GtchParams,
    ObjectiveVector,
    SolutionSet,
    gtch_set,
    gws,
    set_objective_vector,
    tch_scalarize,
)
from .problems import (
    f4m_transform,
    list_problems,
    make_problem,
    make_weights,
    r2_indicator,
    register,
)
from .selection import greedy_subset, random_search_baseline

__version__ = "0.1.0"

__all__ = [
    "DecisionVector",
    "ObjectiveVector",
    "EvaluatedSolution",
    "SolutionSet",
    "GtchParams",
    "set_objective_vector",
    "gws",
    "gtch_set",
    "tch_scalarize",
    "RunConfig",
    "RunResult",
    "run_som_emoa",
    "available_backends",
    "default_backend_name",
    "make_problem",
    "list_problems",
    "register",
    "make_weights",
    "f4m_transform",
    "r2_indicator",
    "greedy_subset",
    "random_search_baseline",
    "__version__",
]
