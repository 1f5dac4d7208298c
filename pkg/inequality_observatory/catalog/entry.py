"""Base class for catalog entries."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Mapping, Optional, Tuple

import numpy as np

from ..errors import BadParams, InvalidScalar, NoComplement, SamplerMissing
from ..numerics import ExtendedReal, PrecisionContext, Scalar
from .types import CatalogListing, Direction, ParamKind, ParamSpec, Point

Params = Dict[str, Any]


class InequalityEntry(ABC):
    """An inequality {V, E, F} with parameter slots and constructive samplers.

    Subclasses describe V and E in prose for `explain`, implement the formula
    and both predicates, and provide a V sampler plus `near_equality`, which
    returns an exact E-point for eps == 0 and a point of V minus E at relative
    distance eps otherwise. Entries with a complementary inequality implement
    the `complement_*` hooks as well.
    """

    name: ClassVar[str]
    reference: ClassVar[str]
    direction: ClassVar[Direction]
    statement: ClassVar[str] = ""
    scalar_names: ClassVar[Tuple[str, ...]] = ()
    tuple_names: ClassVar[Tuple[str, ...]] = ()
    signed_tuples: ClassVar[bool] = False
    params: ClassVar[Tuple[ParamSpec, ...]] = ()
    validity_text: ClassVar[str] = ""
    equality_text: ClassVar[str] = ""
    complement_validity_text: ClassVar[Optional[str]] = None
    complement_equality_text: ClassVar[Optional[str]] = None
    default_plans: ClassVar[Tuple[Mapping[str, Any], ...]] = ({},)
    complement_plans: ClassVar[Tuple[Mapping[str, Any], ...]] = ()

    @property
    def has_complement(self) -> bool:
        return self.complement_validity_text is not None

    def listing(self) -> CatalogListing:
        return CatalogListing(
            name=self.name,
            params=self.params,
            paper_ref=self.reference,
            scalar_names=self.scalar_names,
            tuple_names=self.tuple_names,
            has_complement=self.has_complement,
        )

    def normalize_params(self, raw: Optional[Mapping[str, Any]], ctx: PrecisionContext) -> Params:
        raw = dict(raw or {})
        known = {spec.name for spec in self.params}
        unknown = sorted(set(raw) - known)
        if unknown:
            expected = ", ".join(sorted(known)) or "none"
            raise BadParams(f"Unknown parameter(s) {', '.join(unknown)} for {self.name}. Expected one of: {expected}.")
        params: Params = {}
        for spec in self.params:
            value = raw.get(spec.name, spec.default)
            if value is None:
                raise BadParams(f"{self.name} requires parameter '{spec.name}' ({spec.constraint}).")
            params[spec.name] = _convert(spec, value, ctx, self.name)
        self.check_params(params, ctx)
        return params

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        """Raise BadParams when params lie in neither V's nor ~V's parameter region."""

    @abstractmethod
    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        """Return (lhs, rhs)."""

    @abstractmethod
    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        ...

    @abstractmethod
    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        ...

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        raise SamplerMissing(f"{self.name} has no sampler.")

    def near_equality(
        self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext
    ) -> Optional[Point]:
        return None

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        raise NoComplement(f"{self.name} has no registered complementary inequality.")

    def in_complement_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        raise NoComplement(f"{self.name} has no registered complementary inequality.")

    def sample_complement(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        raise SamplerMissing(f"{self.name} has no complement sampler.")

    def near_complement_equality(
        self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext
    ) -> Optional[Point]:
        return None


def _convert(spec: ParamSpec, value: Any, ctx: PrecisionContext, entry: str) -> Any:
    try:
        if spec.kind is ParamKind.INTEGER:
            number = ctx.scalar(value)
            if number != int(number):
                raise BadParams(f"{entry}: parameter '{spec.name}' must be an integer, got {value!r}.")
            return int(number)
        if spec.kind is ParamKind.SCALAR:
            return ctx.scalar(value)
        if spec.kind is ParamKind.EXTENDED:
            return ExtendedReal.parse(value, ctx)
    except InvalidScalar as exc:
        raise BadParams(f"{entry}: parameter '{spec.name}': {exc}") from exc
    text = getattr(value, "value", value)
    if text not in spec.choices:
        raise BadParams(f"{entry}: parameter '{spec.name}' must be one of: {', '.join(spec.choices)}.")
    return text
