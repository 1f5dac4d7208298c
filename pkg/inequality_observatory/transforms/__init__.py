"""Equivalence witnesses: instance maps and derivations between catalog entries."""

from ..means import conjugate_index
from .constructions import (
    backward_reduce,
    holder_to_liapunov,
    liapunov_exponent,
    liapunov_to_holder,
    reduced_margin,
)
from .registry import DEFAULT_WITNESSES, WitnessRegistry, get_witness, list_witnesses, register_witness
from .types import (
    Derivation,
    EquivalenceWitness,
    MapDirection,
    WitnessFailure,
    WitnessKind,
    WitnessReport,
)
from .verify import apply_witness, corrupted, points_close, verify_witness

from . import witnesses  # noqa: E402  registers the built-in witnesses

__all__ = [
    "conjugate_index",
    "backward_reduce",
    "holder_to_liapunov",
    "liapunov_exponent",
    "liapunov_to_holder",
    "reduced_margin",
    "DEFAULT_WITNESSES",
    "WitnessRegistry",
    "get_witness",
    "list_witnesses",
    "register_witness",
    "Derivation",
    "EquivalenceWitness",
    "MapDirection",
    "WitnessFailure",
    "WitnessKind",
    "WitnessReport",
    "apply_witness",
    "corrupted",
    "points_close",
    "verify_witness",
    "witnesses",
]
