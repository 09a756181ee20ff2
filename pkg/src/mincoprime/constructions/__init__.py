"""Explicit minimum coprime labelings for the covered graph families."""
from ._common import ConstructionError, PreconditionError
from .bipartite import complete_bipartite_labeling
from .corona import (
    corona_counting_certificate,
    corona_labeling,
    corona_prime_condition,
    corona_value,
)
from .cycles import VARIANTS, cycle_join_graph, cycle_join_labeling, cycle_join_value
from .formulas import explain_formula, pr_formula
from .pathjoin import (
    ANOMALIES,
    PathJoinState,
    in_exceptional_window,
    path_join_labeling,
    path_join_p5_labeling,
    path_join_value,
    run_pipeline,
    special_join_values,
    threshold,
)

__all__ = [
    "ANOMALIES",
    "ConstructionError",
    "PathJoinState",
    "PreconditionError",
    "VARIANTS",
    "complete_bipartite_labeling",
    "corona_counting_certificate",
    "corona_labeling",
    "corona_prime_condition",
    "corona_value",
    "cycle_join_graph",
    "cycle_join_labeling",
    "cycle_join_value",
    "explain_formula",
    "in_exceptional_window",
    "path_join_labeling",
    "path_join_p5_labeling",
    "path_join_value",
    "pr_formula",
    "run_pipeline",
    "special_join_values",
    "threshold",
]
