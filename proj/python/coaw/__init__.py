"""Constrained multi-objective optimization with weighted cuckoo runs."""

from ._coaw import (
    CoaParams,
    ConfigError,
    FrontMetrics,
    Problem,
    ScalarizerConfig,
    analytic_front_p3,
    builtin_ids,
    default_config,
    dominates,
    front_metrics,
    get_builtin,
    grid_reference_front,
    pareto_filter,
    penalized_cost,
    run,
    run_single_coa,
    sample_weights,
    saw_scalarize,
)

__all__ = [
    "CoaParams",
    "ConfigError",
    "FrontMetrics",
    "Problem",
    "ScalarizerConfig",
    "analytic_front_p3",
    "builtin_ids",
    "default_config",
    "dominates",
    "front_metrics",
    "get_builtin",
    "grid_reference_front",
    "pareto_filter",
    "penalized_cost",
    "run",
    "run_single_coa",
    "sample_weights",
    "saw_scalarize",
]
