"""Witness datatypes and report records."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from ..catalog import InequalityDescriptor, Params, Point, Verdict
from ..numerics import PrecisionContext, Scalar
from ..utils.serialization import scalar_text

PointMap = Callable[[Point, Params, PrecisionContext], Point]
DomainCheck = Callable[[Point, Params, PrecisionContext], bool]
ParamsMap = Callable[[Params], Mapping[str, Any]]


class WitnessKind(str, Enum):
    """How a witness connects its two inequalities."""

    INSTANCE_MAP = "InstanceMap"
    DERIVATION = "Derivation"


class MapDirection(str, Enum):
    FORWARD = "Forward"
    BACKWARD = "Backward"


@dataclass(frozen=True)
class Derivation:
    """A target instance re-derived from premise instances of the source inequality.

    `chain` runs from the target's lhs to its rhs; every link must respect
    the target direction.
    """

    premises: Tuple[Tuple[InequalityDescriptor, Point], ...]
    chain: Tuple[Scalar, ...]

    def with_chain(self, chain: Tuple[Scalar, ...]) -> "Derivation":
        return Derivation(self.premises, chain)


DerivationFn = Callable[[Point, Params, PrecisionContext], Derivation]


def _fixed(params: Mapping[str, Any]) -> ParamsMap:
    return lambda _: dict(params)


@dataclass(frozen=True)
class EquivalenceWitness:
    """Executable form of one equivalence argument between two catalog entries.

    Witness parameters (`params`, drawn per sample from `plans`) are turned
    into catalog parameters for each side by `source_params`/`target_params`.
    """

    name: str
    source: str
    target: str
    reference: str
    description: str
    kind: WitnessKind = WitnessKind.INSTANCE_MAP
    forward: Optional[PointMap] = None
    backward: Optional[PointMap] = None
    derive: Optional[DerivationFn] = None
    source_domain: Optional[DomainCheck] = None
    target_domain: Optional[DomainCheck] = None
    params: Mapping[str, Any] = field(default_factory=dict)
    plans: Tuple[Mapping[str, Any], ...] = ({},)
    source_params: ParamsMap = field(default=_fixed({}))
    target_params: ParamsMap = field(default=_fixed({}))
    target_round_trip: bool = True
    verdict_relation: str = "SameVerdict"

    @property
    def directions(self) -> Tuple[MapDirection, ...]:
        if self.kind is WitnessKind.DERIVATION:
            return (MapDirection.FORWARD,)
        found = []
        if self.forward is not None:
            found.append(MapDirection.FORWARD)
        if self.backward is not None:
            found.append(MapDirection.BACKWARD)
        return tuple(found)

    @property
    def two_way(self) -> bool:
        return len(self.directions) == 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "source": self.source,
            "target": self.target,
            "directions": [d.value for d in self.directions],
            "paper_ref": self.reference,
            "description": self.description,
        }


@dataclass(frozen=True)
class WitnessFailure:
    """One sample on which a witness check failed, with enough to replay it."""

    direction: MapDirection
    index: int
    seed: int
    reason: str
    source_point: Point
    mapped_point: Optional[Point] = None
    expected: Optional[Verdict] = None
    got: Optional[Verdict] = None
    source_margin: Optional[Scalar] = None
    mapped_margin: Optional[Scalar] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "direction": self.direction.value,
            "index": self.index,
            "seed": self.seed,
            "reason": self.reason,
            "source_pt": self.source_point.to_dict(),
        }
        if self.mapped_point is not None:
            payload["mapped_pt"] = self.mapped_point.to_dict()
        if self.expected is not None:
            payload["expected"] = self.expected.value
        if self.got is not None:
            payload["got"] = self.got.value
        if self.source_margin is not None:
            payload["source_margin"] = scalar_text(self.source_margin)
        if self.mapped_margin is not None:
            payload["mapped_margin"] = scalar_text(self.mapped_margin)
        return payload


@dataclass(frozen=True)
class WitnessReport:
    witness: str
    seed: int
    samples: int
    directions: Tuple[MapDirection, ...]
    failures: Tuple[WitnessFailure, ...] = ()
    equality_hits: int = 0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "witness": self.witness,
            "seed": self.seed,
            "samples": self.samples,
            "directions": [d.value for d in self.directions],
            "equality_hits": self.equality_hits,
            "skipped": self.skipped,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
        }
