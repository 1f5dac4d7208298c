"""Weighted means and prefix sequences built on them."""

from .power import (
    arithmetic_mean,
    conjugate_index,
    geometric_mean,
    harmonic_mean,
    power_mean,
    power_sum,
    quadratic_mean,
)
from .sequences import (
    PopoviciuConvention,
    popoviciu_ratio,
    popoviciu_sequence,
    rado_gap,
    rado_sequence,
)
from .tuples import SignedTuple, WeightedTuple

__all__ = [
    "arithmetic_mean",
    "conjugate_index",
    "geometric_mean",
    "harmonic_mean",
    "power_mean",
    "power_sum",
    "quadratic_mean",
    "PopoviciuConvention",
    "popoviciu_ratio",
    "popoviciu_sequence",
    "rado_gap",
    "rado_sequence",
    "SignedTuple",
    "WeightedTuple",
]
