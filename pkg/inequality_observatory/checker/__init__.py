"""Sampling checker: entry soundness, counterexample search, analysis suites and the suite runner."""

from .analysis import (
    ChainReport,
    ConsistencyReport,
    LimitReport,
    MonotoneFamily,
    MonotonicityReport,
    check_backward_consistency,
    check_function_monotonicity,
    check_popoviciu_chain,
    check_power_mean_limits,
    check_rado_chain,
    family_value,
    monotonicity_grid,
)
from .config import EntryPlan, SuiteConfig
from .engine import Counterexample, EntryReport, VerdictCounts, reverify, run_inequality_check, search_violation
from .sampling import SampleOrigin, draw_sample, sample_point, with_plan
from .suite import SearchResult, SuiteReport, run_suite, run_suite_async

__all__ = [
    "ChainReport",
    "ConsistencyReport",
    "LimitReport",
    "MonotoneFamily",
    "MonotonicityReport",
    "check_backward_consistency",
    "check_function_monotonicity",
    "check_popoviciu_chain",
    "check_power_mean_limits",
    "check_rado_chain",
    "family_value",
    "monotonicity_grid",
    "EntryPlan",
    "SuiteConfig",
    "Counterexample",
    "EntryReport",
    "VerdictCounts",
    "reverify",
    "run_inequality_check",
    "search_violation",
    "SampleOrigin",
    "draw_sample",
    "sample_point",
    "with_plan",
    "SearchResult",
    "SuiteReport",
    "run_suite",
    "run_suite_async",
]
