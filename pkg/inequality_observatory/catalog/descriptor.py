"""Inequality descriptors: an entry bound to concrete parameters."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

import numpy as np

from ..errors import ArityMismatch, NoComplement
from ..numerics import ExtendedReal, PrecisionContext, Scalar
from ..utils.serialization import scalar_text
from .entry import InequalityEntry
from .types import Direction, Point, Side

FormulaFn = Callable[[Point, PrecisionContext], Tuple[Scalar, Scalar]]


def param_text(value: Any) -> Any:
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, ExtendedReal):
        return str(value)
    return scalar_text(value)


@dataclass(frozen=True, eq=False)
class InequalityDescriptor:
    """Named triple {V, E, F} with a direction, ready to classify points."""

    entry: InequalityEntry
    params: Mapping[str, Any]
    direction: Direction
    side: Side = Side.PRIMARY
    formula_override: Optional[FormulaFn] = None

    @property
    def name(self) -> str:
        return self.entry.name

    @property
    def reference(self) -> str:
        return self.entry.reference

    @property
    def scalar_names(self) -> Tuple[str, ...]:
        return self.entry.scalar_names

    @property
    def tuple_names(self) -> Tuple[str, ...]:
        return self.entry.tuple_names

    @property
    def validity_text(self) -> str:
        if self.side is Side.COMPLEMENT:
            return self.entry.complement_validity_text or ""
        return self.entry.validity_text

    @property
    def equality_text(self) -> str:
        if self.side is Side.COMPLEMENT:
            return self.entry.complement_equality_text or ""
        return self.entry.equality_text

    @property
    def has_complement(self) -> bool:
        return self.entry.has_complement

    @property
    def key(self) -> str:
        """Stable label used for seeds and report rows."""
        suffix = "" if self.side is Side.PRIMARY else "~"
        flip = "" if self.direction is self._natural_direction() else "!"
        params = ",".join(f"{k}={param_text(v)}" for k, v in sorted(self.params.items()))
        return f"{suffix}{flip}{self.name}({params})"

    def _natural_direction(self) -> Direction:
        base = self.entry.direction
        return base if self.side is Side.PRIMARY else base.reversed()

    def check_arity(self, pt: Point) -> None:
        if len(pt.scalars) != len(self.scalar_names) or len(pt.tuples) != len(self.tuple_names):
            raise ArityMismatch(
                f"{self.name} expects scalars ({', '.join(self.scalar_names)}) and "
                f"{len(self.tuple_names)} tuple(s); got {len(pt.scalars)} scalar(s) and {len(pt.tuples)} tuple(s)."
            )

    def validity(self, pt: Point, ctx: PrecisionContext) -> bool:
        self.check_arity(pt)
        params = dict(self.params)
        if self.side is Side.COMPLEMENT:
            return self.entry.in_complement(params, pt, ctx)
        return self.entry.in_validity(params, pt, ctx)

    def equality(self, pt: Point, ctx: PrecisionContext) -> bool:
        if not self.validity(pt, ctx):
            return False
        params = dict(self.params)
        if self.side is Side.COMPLEMENT:
            return self.entry.in_complement_equality(params, pt, ctx)
        return self.entry.in_equality(params, pt, ctx)

    def formula(self, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        if self.formula_override is not None:
            return self.formula_override(pt, ctx)
        return self.entry.formula(dict(self.params), pt, ctx)

    def sample(self, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        params = dict(self.params)
        if self.side is Side.COMPLEMENT:
            return self.entry.sample_complement(params, rng, ctx)
        return self.entry.sample(params, rng, ctx)

    def near_equality(self, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Optional[Point]:
        params = dict(self.params)
        if self.side is Side.COMPLEMENT:
            return self.entry.near_complement_equality(params, rng, eps, ctx)
        return self.entry.near_equality(params, rng, eps, ctx)

    def complement(self) -> "InequalityDescriptor":
        if not self.entry.has_complement:
            raise NoComplement(f"{self.name} has no registered complementary inequality.")
        side = Side.COMPLEMENT if self.side is Side.PRIMARY else Side.PRIMARY
        return replace(self, side=side, direction=self.direction.reversed())

    def flipped(self) -> "InequalityDescriptor":
        return replace(self, direction=self.direction.reversed())

    def with_formula(self, formula: FormulaFn) -> "InequalityDescriptor":
        return replace(self, formula_override=formula)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "side": self.side.value,
            "direction": self.direction.value,
            "params": {k: param_text(v) for k, v in sorted(self.params.items())},
            "paper_ref": self.reference,
        }
