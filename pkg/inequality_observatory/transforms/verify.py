"""Applying witnesses to points and checking them by sampling."""

from __future__ import annotations

import logging
from dataclasses import replace
from functools import partial
from typing import Any, Callable, List, Mapping, Optional, Tuple, Union

import numpy as np

from ..catalog import Direction, InequalityDescriptor, Params, Point, Verdict, classify, lookup
from ..catalog.sampling import draw_params, rng_for
from ..errors import ObservatoryError, PointOutsideValidity, UnsupportedDirection
from ..numerics import PrecisionContext, Scalar, SignClass, classify_sign
from ..utils.hashing import derive_seed
from .types import (
    Derivation,
    DomainCheck,
    EquivalenceWitness,
    MapDirection,
    PointMap,
    WitnessFailure,
    WitnessKind,
    WitnessReport,
)

logger = logging.getLogger(__name__)

BOUNDARY_FRACTION = 0.25
_DRAW_ATTEMPTS = 20


def resolve_params(
    w: EquivalenceWitness,
    overrides: Optional[Mapping[str, Any]],
    rng: np.random.Generator,
    ctx: PrecisionContext,
    index: int = 0,
) -> Params:
    plan = {**w.params, **w.plans[index % len(w.plans)], **(overrides or {})}
    return draw_params(plan, rng, ctx)


def descriptors(
    w: EquivalenceWitness, wp: Params, ctx: PrecisionContext
) -> Tuple[InequalityDescriptor, InequalityDescriptor]:
    return lookup(w.source, w.source_params(wp), ctx), lookup(w.target, w.target_params(wp), ctx)


def _require(d: InequalityDescriptor, pt: Point, domain: Optional[DomainCheck], wp: Params, ctx: PrecisionContext) -> None:
    if not d.validity(pt, ctx) or (domain is not None and not domain(pt, wp, ctx)):
        raise PointOutsideValidity(f"Point is outside the validity set of {d.key} for this witness.")


def apply_witness(
    w: EquivalenceWitness,
    pt: Point,
    direction: MapDirection = MapDirection.FORWARD,
    params: Optional[Mapping[str, Any]] = None,
    ctx: Optional[PrecisionContext] = None,
) -> Union[Point, Derivation]:
    """Map pt to the other side; derivation witnesses take a target point and return its derivation."""
    ctx = ctx or PrecisionContext()
    direction = MapDirection(direction)
    if direction not in w.directions:
        raise UnsupportedDirection(f"{w.name} is registered one-way; {direction.value} is not available.")
    wp = {**w.params, **(params or {})}
    source, target = descriptors(w, wp, ctx)
    pt = pt.at_precision(ctx)
    if w.kind is WitnessKind.DERIVATION:
        _require(target, pt, w.target_domain, wp, ctx)
        return w.derive(pt, wp, ctx)
    if direction is MapDirection.FORWARD:
        _require(source, pt, w.source_domain, wp, ctx)
        return w.forward(pt, wp, ctx)
    _require(target, pt, w.target_domain, wp, ctx)
    return w.backward(pt, wp, ctx)


def _draw(
    d: InequalityDescriptor,
    domain: Optional[DomainCheck],
    wp: Params,
    rng: np.random.Generator,
    ctx: PrecisionContext,
    boundary_fraction: float,
) -> Optional[Point]:
    for _ in range(_DRAW_ATTEMPTS):
        pt = d.near_equality(rng, 0.0, ctx) if rng.random() < boundary_fraction else None
        if pt is None:
            pt = d.sample(rng, ctx)
        if domain is None or domain(pt, wp, ctx):
            return pt
    return None


def _close(left: Scalar, right: Scalar, tolerance: Scalar, ctx: PrecisionContext) -> bool:
    return ctx.mp.fabs(left - right) <= tolerance * ctx.scale_of(left, right)


def points_close(first: Point, second: Point, ctx: PrecisionContext) -> bool:
    """Coordinates and weights agree within 2^(-precision_bits+12) relative."""
    tolerance = ctx.mp.ldexp(ctx.mp.mpf(1), -ctx.precision_bits + 12)
    if len(first.scalars) != len(second.scalars) or len(first.tuples) != len(second.tuples):
        return False
    pairs: List[Tuple[Scalar, Scalar]] = list(zip(first.scalars, second.scalars))
    for a, b in zip(first.tuples, second.tuples):
        if a.n != b.n:
            return False
        pairs.extend(zip(a.values, b.values))
        pairs.extend(zip(a.weights, b.weights))
    return all(_close(u, v, tolerance, ctx) for u, v in pairs)


def _check_map(
    direction: MapDirection,
    index: int,
    seed: int,
    pt: Point,
    wp: Params,
    origin: InequalityDescriptor,
    destination: InequalityDescriptor,
    mapping: PointMap,
    inverse: Optional[PointMap],
    ctx: PrecisionContext,
) -> Tuple[Optional[WitnessFailure], bool]:
    fail = partial(WitnessFailure, direction, index, seed, source_point=pt)
    try:
        before = classify(origin, pt, ctx)
        mapped = mapping(pt, wp, ctx)
    except ObservatoryError as exc:
        return fail(f"map raised: {exc}"), False
    if not destination.validity(mapped, ctx):
        return fail("mapped point outside validity", mapped_point=mapped), False
    try:
        after = classify(destination, mapped, ctx)
    except ObservatoryError as exc:
        return fail(f"evaluation raised: {exc}", mapped_point=mapped), False
    if before.verdict is Verdict.VIOLATED or after.verdict is not before.verdict:
        return (
            fail(
                "verdict mismatch",
                mapped_point=mapped,
                expected=before.verdict,
                got=after.verdict,
                source_margin=before.margin,
                mapped_margin=after.margin,
            ),
            False,
        )
    if inverse is not None:
        try:
            back = inverse(mapped, wp, ctx)
            close = points_close(back, pt, ctx)
        except ObservatoryError as exc:
            return fail(f"inverse raised: {exc}", mapped_point=mapped), False
        if not close:
            return fail("round trip mismatch", mapped_point=mapped), False
    return None, before.verdict is Verdict.EQUALITY


def _link_holds(lower: Scalar, upper: Scalar, ctx: PrecisionContext) -> bool:
    return classify_sign(upper - lower, ctx.scale_of(lower, upper), ctx) is not SignClass.NEGATIVE


def _check_derivation(
    index: int,
    seed: int,
    pt: Point,
    wp: Params,
    w: EquivalenceWitness,
    target: InequalityDescriptor,
    ctx: PrecisionContext,
) -> Tuple[Optional[WitnessFailure], bool]:
    fail = partial(WitnessFailure, MapDirection.FORWARD, index, seed, source_point=pt)
    try:
        result = classify(target, pt, ctx)
        derivation = w.derive(pt, wp, ctx)
        premises = [(d, q, classify(d, q, ctx).verdict) for d, q in derivation.premises]
    except ObservatoryError as exc:
        return fail(f"derivation raised: {exc}"), False
    if result.verdict is Verdict.VIOLATED:
        return fail("target violated", got=result.verdict, mapped_margin=result.margin), False
    for premise, premise_pt, verdict in premises:
        if verdict in (Verdict.OUTSIDE, Verdict.VIOLATED):
            return fail(f"premise {premise.key} is {verdict.value}", mapped_point=premise_pt, got=verdict), False
    chain = derivation.chain
    if target.direction is Direction.GEQ:
        chain = tuple(reversed(chain))
        ends = (result.rhs, result.lhs)
    else:
        ends = (result.lhs, result.rhs)
    if not (ctx.approx_equal(chain[0], ends[0]) and ctx.approx_equal(chain[-1], ends[1])):
        return fail("chain endpoints differ from the target sides"), False
    for lower, upper in zip(chain, chain[1:]):
        if not _link_holds(lower, upper, ctx):
            return fail("chain link reversed", expected=result.verdict), False
    return None, result.verdict is Verdict.EQUALITY


def verify_witness(
    w: EquivalenceWitness,
    sample_count: int,
    seed: int,
    ctx: Optional[PrecisionContext] = None,
    *,
    params: Optional[Mapping[str, Any]] = None,
    boundary_fraction: float = BOUNDARY_FRACTION,
) -> WitnessReport:
    """Sample each available direction and record every failed check.

    A quarter of the samples (by default) start from exact equality points so
    the Equality <-> Equality correspondence is exercised, not just strict points.
    """
    ctx = ctx or PrecisionContext()
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1.")
    failures: List[WitnessFailure] = []
    hits = 0
    skipped = 0
    for direction in w.directions:
        for index in range(sample_count):
            sample_seed = derive_seed(seed, w.name, direction.value, index)
            rng = rng_for(seed, w.name, direction.value, index)
            wp = resolve_params(w, params, rng, ctx, index)
            source, target = descriptors(w, wp, ctx)
            if w.kind is WitnessKind.DERIVATION:
                pt = _draw(target, w.target_domain, wp, rng, ctx, boundary_fraction)
                if pt is None:
                    skipped += 1
                    continue
                failure, hit = _check_derivation(index, sample_seed, pt, wp, w, target, ctx)
            elif direction is MapDirection.FORWARD:
                pt = _draw(source, w.source_domain, wp, rng, ctx, boundary_fraction)
                if pt is None:
                    skipped += 1
                    continue
                failure, hit = _check_map(direction, index, sample_seed, pt, wp, source, target, w.forward, w.backward, ctx)
            else:
                pt = _draw(target, w.target_domain, wp, rng, ctx, boundary_fraction)
                if pt is None:
                    skipped += 1
                    continue
                inverse = w.forward if w.target_round_trip else None
                failure, hit = _check_map(direction, index, sample_seed, pt, wp, target, source, w.backward, inverse, ctx)
            hits += hit
            if failure is not None:
                logger.debug("%s %s sample %d failed: %s", w.name, direction.value, index, failure.reason)
                failures.append(failure)
    logger.info("%s: %d failure(s), %d equality hit(s)", w.name, len(failures), hits)
    return WitnessReport(
        witness=w.name,
        seed=seed,
        samples=sample_count,
        directions=w.directions,
        failures=tuple(failures),
        equality_hits=hits,
        skipped=skipped,
    )


def _nudge(value: Scalar, delta: float, ctx: PrecisionContext) -> Scalar:
    return value + ctx.mp.mpf(delta)


def _perturb_point(pt: Point, delta: float, ctx: PrecisionContext) -> Point:
    if pt.scalars:
        return pt.replace_scalar(0, _nudge(pt.scalars[0], delta, ctx))
    first = pt.tuples[0]
    values = list(first.values)
    values[0] = _nudge(values[0], delta, ctx)
    return pt.replace_tuple(0, first.with_values(values))


def _perturbed_map(mapping: PointMap, delta: float) -> PointMap:
    def perturbed(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
        return _perturb_point(mapping(pt, wp, ctx), delta, ctx)

    return perturbed


def _perturbed_derivation(derive: Callable[..., Derivation], delta: float) -> Callable[..., Derivation]:
    def perturbed(pt: Point, wp: Params, ctx: PrecisionContext) -> Derivation:
        derivation = derive(pt, wp, ctx)
        chain = derivation.chain
        if len(chain) <= 2:
            # no inner links to move; shift the upper end off the target side
            return derivation.with_chain(chain[:-1] + (_nudge(chain[-1], delta, ctx),))
        inner = tuple(_nudge(c, delta, ctx) for c in chain[1:-1])
        return derivation.with_chain((chain[0],) + inner + (chain[-1],))

    return perturbed


def corrupted(w: EquivalenceWitness, delta: float = 0.1) -> EquivalenceWitness:
    """Mutant of w: the forward image (or the derivation chain) shifted by +delta.

    Chains with inner links get those links moved; two-element chains get
    their last element moved, so the endpoint check catches them.
    """
    name = f"{w.name}~corrupted"
    if w.kind is WitnessKind.DERIVATION:
        return replace(w, name=name, derive=_perturbed_derivation(w.derive, delta))
    return replace(w, name=name, forward=_perturbed_map(w.forward, delta))
