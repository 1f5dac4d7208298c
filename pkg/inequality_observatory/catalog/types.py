"""Catalog datatypes and enums."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Optional, Tuple

from ..means import WeightedTuple
from ..numerics import PrecisionContext, Scalar
from ..utils.serialization import scalar_text


class Direction(str, Enum):
    """Which side of the formula is asserted to dominate."""

    LEQ = "LeqHolds"
    GEQ = "GeqHolds"

    def reversed(self) -> "Direction":
        return Direction.GEQ if self is Direction.LEQ else Direction.LEQ

    @property
    def symbol(self) -> str:
        return "<=" if self is Direction.LEQ else ">="


class Verdict(str, Enum):
    """Outcome of evaluating a descriptor at a point."""

    STRICT = "StrictlyHolds"
    EQUALITY = "Equality"
    VIOLATED = "Violated"
    OUTSIDE = "OutsideValidity"


class Side(str, Enum):
    """Primary validity set or its registered complement."""

    PRIMARY = "primary"
    COMPLEMENT = "complement"


class ParamKind(str, Enum):
    INTEGER = "integer"
    SCALAR = "scalar"
    EXTENDED = "extended"
    CHOICE = "choice"


@dataclass(frozen=True)
class ParamSpec:
    """One named parameter slot of a catalog entry."""

    name: str
    kind: ParamKind
    default: Any = None
    constraint: str = ""
    choices: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Point:
    """Scalar variables followed by weighted tuple slots."""

    scalars: Tuple[Scalar, ...] = ()
    tuples: Tuple[WeightedTuple, ...] = ()

    @classmethod
    def of(
        cls,
        scalars: Iterable[Any] = (),
        tuples: Iterable[WeightedTuple] = (),
        *,
        ctx: Optional[PrecisionContext] = None,
    ) -> "Point":
        ctx = ctx or PrecisionContext()
        return cls(ctx.scalars(scalars), tuple(tuples))

    def at_precision(self, ctx: PrecisionContext) -> "Point":
        return Point(ctx.scalars(self.scalars), tuple(t.at_precision(ctx) for t in self.tuples))

    def replace_scalar(self, index: int, value: Scalar) -> "Point":
        scalars = list(self.scalars)
        scalars[index] = value
        return Point(tuple(scalars), self.tuples)

    def replace_tuple(self, index: int, value: WeightedTuple) -> "Point":
        tuples = list(self.tuples)
        tuples[index] = value
        return Point(self.scalars, tuple(tuples))

    def coordinates(self) -> Tuple[Scalar, ...]:
        """Every scalar and tuple value in order; weights excluded."""
        flat = list(self.scalars)
        for t in self.tuples:
            flat.extend(t.values)
        return tuple(flat)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"scalars": [scalar_text(v) for v in self.scalars]}
        if self.tuples:
            payload["tuples"] = [t.to_dict() for t in self.tuples]
        return payload


@dataclass(frozen=True)
class PointClassification:
    """Verdict plus both formula sides and the signed margin."""

    verdict: Verdict
    lhs: Optional[Scalar] = None
    rhs: Optional[Scalar] = None
    margin: Optional[Scalar] = None
    scale: Optional[Scalar] = None

    @property
    def relative_margin(self) -> Optional[Scalar]:
        if self.margin is None or self.scale is None:
            return None
        return self.margin / self.scale

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"verdict": self.verdict.value}
        if self.margin is not None:
            payload.update(lhs=scalar_text(self.lhs), rhs=scalar_text(self.rhs), margin=scalar_text(self.margin))
        return payload


@dataclass(frozen=True)
class CatalogListing:
    """One row of list_catalog()."""

    name: str
    params: Tuple[ParamSpec, ...]
    paper_ref: str
    scalar_names: Tuple[str, ...]
    tuple_names: Tuple[str, ...]
    has_complement: bool = False

    @property
    def constraints(self) -> str:
        return "; ".join(f"{p.name}: {p.constraint}" for p in self.params if p.constraint)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": {p.name: p.constraint or p.kind.value for p in self.params},
            "paper_ref": self.paper_ref,
            "arity": {"scalars": list(self.scalar_names), "tuples": list(self.tuple_names)},
            "complement": self.has_complement,
        }

