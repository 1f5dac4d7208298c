"""Inequality observatory: a catalog of classical inequalities, equivalence witnesses and a sampling checker."""

from .catalog import (
    InequalityDescriptor,
    Point,
    Verdict,
    classify,
    complementary,
    flipped,
    list_catalog,
    lookup,
)
from .checker import SuiteConfig, SuiteReport, run_inequality_check, run_suite, search_violation
from .means import PopoviciuConvention, SignedTuple, WeightedTuple, power_mean
from .numerics import PrecisionContext
from .transforms import EquivalenceWitness, MapDirection, apply_witness, get_witness, list_witnesses, verify_witness

__version__ = "0.1.0"

__all__ = [
    "InequalityDescriptor",
    "Point",
    "Verdict",
    "classify",
    "complementary",
    "flipped",
    "list_catalog",
    "lookup",
    "SuiteConfig",
    "SuiteReport",
    "run_inequality_check",
    "run_suite",
    "search_violation",
    "PopoviciuConvention",
    "SignedTuple",
    "WeightedTuple",
    "power_mean",
    "PrecisionContext",
    "EquivalenceWitness",
    "MapDirection",
    "apply_witness",
    "get_witness",
    "list_witnesses",
    "verify_witness",
    "__version__",
]
