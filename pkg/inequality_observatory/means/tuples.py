"""Weighted value sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from ..errors import InvalidTuple
from ..numerics import PrecisionContext, Scalar
from ..utils.serialization import scalar_text


@dataclass(frozen=True)
class WeightedTuple:
    """Positive values paired with positive weights."""

    values: Tuple[Scalar, ...]
    weights: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.values) == 0:
            raise InvalidTuple("Tuple must contain at least one value.")
        if len(self.values) != len(self.weights):
            raise InvalidTuple(f"{len(self.values)} values but {len(self.weights)} weights.")
        if any(not w > 0 for w in self.weights):
            raise InvalidTuple("Weights must be strictly positive.")
        self._check_values()

    def _check_values(self) -> None:
        if any(not v > 0 for v in self.values):
            raise InvalidTuple("Values must be strictly positive.")

    @classmethod
    def of(
        cls,
        values: Iterable[Any],
        weights: Optional[Iterable[Any]] = None,
        *,
        ctx: Optional[PrecisionContext] = None,
    ) -> "WeightedTuple":
        """Build from plain numbers; weights default to all ones."""
        ctx = ctx or PrecisionContext()
        vals = ctx.scalars(values)
        ws = ctx.scalars(weights) if weights is not None else tuple(ctx.mp.mpf(1) for _ in vals)
        return cls(vals, ws)

    @property
    def n(self) -> int:
        return len(self.values)

    def total_weight(self, ctx: PrecisionContext) -> Scalar:
        return ctx.mp.fsum(self.weights)

    def prefix(self, k: int) -> "WeightedTuple":
        """First k entries, keeping the concrete tuple type."""
        if not 1 <= k <= self.n:
            raise InvalidTuple(f"Prefix length {k} outside 1..{self.n}.")
        return type(self)(self.values[:k], self.weights[:k])

    def with_values(self, values: Sequence[Scalar]) -> "WeightedTuple":
        return type(self)(tuple(values), self.weights)

    def at_precision(self, ctx: PrecisionContext) -> "WeightedTuple":
        return type(self)(ctx.scalars(self.values), ctx.scalars(self.weights))

    def is_constant(self, ctx: PrecisionContext) -> bool:
        first = self.values[0]
        return all(ctx.approx_equal(v, first) for v in self.values[1:])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "values": [scalar_text(v) for v in self.values],
            "weights": [scalar_text(w) for w in self.weights],
        }


@dataclass(frozen=True)
class SignedTuple(WeightedTuple):
    """Weighted tuple whose values only need to exceed -1."""

    def _check_values(self) -> None:
        if any(not v > -1 for v in self.values):
            raise InvalidTuple("Values must be greater than -1.")
