"""Per-variable validity regions with pinned equality values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, ClassVar, Dict, List, Mapping, Optional, Tuple

import numpy as np

from ..errors import NoComplement, SamplerMissing
from ..numerics import PrecisionContext, Scalar
from .entry import InequalityEntry, Params
from .sampling import above_minus_one, exponent_outside_unit, integer, log_uniform, uniform
from .types import Point

Draw = Callable[[np.random.Generator, PrecisionContext], Scalar]


@dataclass(frozen=True)
class Region:
    """A set of admissible values for one scalar variable.

    `pins` lists (value, step) pairs: the variable equal to `value` puts the
    point in E, and `value + step*eps` moves into the region's interior.
    `interior` draws values bounded away from every pin.
    """

    label: str
    contains: Callable[[Scalar], bool]
    draw: Draw
    interior: Draw
    pins: Tuple[Tuple[int, int], ...] = ()


def _is_integer(value: Scalar) -> bool:
    return value == int(value)


def _either(first: Draw, second: Draw) -> Draw:
    def draw(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
        return first(rng, ctx) if rng.random() < 0.5 else second(rng, ctx)

    return draw


def _positive_interior(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return log_uniform(rng, ctx, 1e-2, 1e2)


def _negative_fraction(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return -uniform(rng, ctx, 0.01, 0.99)


def _away_from_one(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return _either(lambda r, c: log_uniform(r, c, 1e-2, 0.9), lambda r, c: log_uniform(r, c, 1.1, 1e2))(rng, ctx)


def _above_one(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return 1 + uniform(rng, ctx, 1e-3, 5.0)


def _above_one_interior(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return 1 + uniform(rng, ctx, 0.05, 5.0)


def _negative(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return -uniform(rng, ctx, 1e-3, 5.0)


def _negative_interior(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    return -uniform(rng, ctx, 0.05, 5.0)


POSITIVE = Region("> 0", lambda v: v > 0, log_uniform, _positive_interior)
POSITIVE_AROUND_ONE = Region("> 0", lambda v: v > 0, log_uniform, _away_from_one, pins=((1, 1),))
NONNEGATIVE = Region(">= 0", lambda v: v >= 0, log_uniform, _positive_interior, pins=((0, 1),))
MINUS_ONE_TO_ZERO = Region(
    "in (-1, 0]",
    lambda v: -1 < v <= 0,
    lambda rng, ctx: log_uniform(rng, ctx, 1e-3, 1.0) - 1,
    _negative_fraction,
    pins=((0, -1),),
)
ABOVE_MINUS_ONE = Region(
    "> -1",
    lambda v: v > -1,
    above_minus_one,
    _either(_negative_fraction, _positive_interior),
    pins=((0, 1),),
)
BELOW_ONE = Region(
    "< 1",
    lambda v: v < 1,
    lambda rng, ctx: 1 - log_uniform(rng, ctx),
    _either(lambda r, c: uniform(r, c, 0.01, 0.99), lambda r, c: -log_uniform(r, c, 1e-2, 1e2)),
    pins=((0, 1),),
)
UNIT_CLOSED = Region(
    "in [0, 1]",
    lambda v: 0 <= v <= 1,
    lambda rng, ctx: uniform(rng, ctx, 0.0, 1.0),
    lambda rng, ctx: uniform(rng, ctx, 0.05, 0.95),
    pins=((0, 1), (1, -1)),
)
UNIT_OPEN = Region(
    "in (0, 1)",
    lambda v: 0 < v < 1,
    lambda rng, ctx: uniform(rng, ctx, 1e-9, 1 - 1e-9),
    lambda rng, ctx: uniform(rng, ctx, 0.05, 0.95),
)
ABOVE_ONE = Region("> 1", lambda v: v > 1, _above_one, _above_one_interior)
AT_LEAST_ONE = Region(">= 1", lambda v: v >= 1, _above_one, _above_one_interior)
NEGATIVE = Region("< 0", lambda v: v < 0, _negative, _negative_interior)
OUTSIDE_UNIT = Region(
    "< 0 or > 1",
    lambda v: v < 0 or v > 1,
    exponent_outside_unit,
    _either(_negative_interior, _above_one_interior),
)
OUTSIDE_UNIT_CLOSED = Region(
    "<= 0 or >= 1",
    lambda v: v <= 0 or v >= 1,
    lambda rng, ctx: exponent_outside_unit(rng, ctx, closed=True),
    _either(_negative_interior, _above_one_interior),
    pins=((0, -1), (1, 1)),
)


def integers_from(low: int, high: int = 20) -> Region:
    """Integers >= low; draws stay within [low, high]."""
    draw: Draw = lambda rng, ctx: ctx.mp.mpf(integer(rng, low, high))  # noqa: E731
    return Region(f"integer >= {low}", lambda v: v >= low and _is_integer(v), draw, draw)


class RegionEntry(InequalityEntry):
    """Entry whose V is a product of per-variable regions.

    E is the union of the pins of each region together with the pairwise
    `relations` (variable equalities such as x = y).
    """

    regions: ClassVar[Mapping[str, Region]] = {}
    complement_regions: ClassVar[Optional[Mapping[str, Region]]] = None
    relations: ClassVar[Tuple[Tuple[str, str], ...]] = ()

    def _values(self, pt: Point) -> Dict[str, Scalar]:
        return dict(zip(self.scalar_names, pt.scalars))

    def _regions(self, complement: bool) -> Mapping[str, Region]:
        if complement:
            if self.complement_regions is None:
                raise NoComplement(f"{self.name} has no registered complementary inequality.")
            return {**self.regions, **self.complement_regions}
        return self.regions

    def extra_validity(self, values: Mapping[str, Scalar], ctx: PrecisionContext) -> bool:
        return True

    def _inside(self, pt: Point, ctx: PrecisionContext, complement: bool) -> bool:
        regions = self._regions(complement)
        values = self._values(pt)
        return all(regions[name].contains(values[name]) for name in self.scalar_names) and self.extra_validity(values, ctx)

    def _on_equality(self, pt: Point, ctx: PrecisionContext, complement: bool) -> bool:
        regions = self._regions(complement)
        values = self._values(pt)
        for name in self.scalar_names:
            for pin, _ in regions[name].pins:
                if ctx.approx_equal(values[name], pin):
                    return True
        return any(ctx.approx_equal(values[left], values[right]) for left, right in self.relations)

    def _draw(self, rng: np.random.Generator, ctx: PrecisionContext, complement: bool) -> Point:
        regions = self._regions(complement)
        for _ in range(100):
            values = [regions[name].draw(rng, ctx) for name in self.scalar_names]
            pt = Point(tuple(values))
            if self._inside(pt, ctx, complement):
                return pt
        raise SamplerMissing(f"{self.name}: could not draw a valid point.")

    def _near(self, rng: np.random.Generator, eps: float, ctx: PrecisionContext, complement: bool) -> Optional[Point]:
        regions = self._regions(complement)
        branches: List[Tuple[str, object]] = [
            ("pin", (name, pin, step)) for name in self.scalar_names for pin, step in regions[name].pins
        ]
        branches.extend(("relation", pair) for pair in self.relations)
        if not branches:
            return None
        mp = ctx.mp
        for _ in range(100):
            kind, branch = branches[int(rng.integers(len(branches)))]
            values = {name: regions[name].interior(rng, ctx) for name in self.scalar_names}
            if kind == "pin":
                name, pin, step = branch  # type: ignore[misc]
                values[name] = mp.mpf(pin) + step * mp.mpf(eps)
            else:
                left, right = branch  # type: ignore[misc]
                values[right] = values[left] * (1 + mp.mpf(eps))
            pt = Point(tuple(values[name] for name in self.scalar_names))
            if self._inside(pt, ctx, complement):
                return pt
        return None

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._inside(pt, ctx, complement=False)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._on_equality(pt, ctx, complement=False)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return self._draw(rng, ctx, complement=False)

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Optional[Point]:
        return self._near(rng, eps, ctx, complement=False)

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._inside(pt, ctx, complement=True)

    def in_complement_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._on_equality(pt, ctx, complement=True)

    def sample_complement(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return self._draw(rng, ctx, complement=True)

    def near_complement_equality(
        self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext
    ) -> Optional[Point]:
        return self._near(rng, eps, ctx, complement=True)
