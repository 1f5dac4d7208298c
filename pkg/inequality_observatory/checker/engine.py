"""Per-entry soundness checks and the counterexample search."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..catalog import InequalityDescriptor, Point, PointClassification, Verdict, classify
from ..catalog.descriptor import param_text
from ..errors import ObservatoryError, Overflow
from ..numerics import PrecisionContext, Scalar
from ..utils.hashing import derive_seed
from ..utils.serialization import scalar_text
from .config import Plan, SuiteConfig
from .sampling import SampleOrigin, draw_sample, with_plan

logger = logging.getLogger(__name__)

REVERIFY_FACTOR = 4
INITIAL_STEP = 0.1
MIN_STEP = 1e-12

Coordinate = Union[int, Tuple[int, int]]


@dataclass(frozen=True)
class Counterexample:
    """A point of V on which the descriptor is Violated, confirmed at elevated precision."""

    entry: str
    point: Point
    margin: Scalar
    seed: int
    index: int
    params: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "entry": self.entry,
            "params": self.params,
            "point": self.point.to_dict(),
            "margin": scalar_text(self.margin),
            "seed": self.seed,
            "index": self.index,
        }


@dataclass
class VerdictCounts:
    strict: int = 0
    equality: int = 0
    violated: int = 0
    outside: int = 0
    overflow: int = 0
    errors: int = 0

    def add(self, verdict: Verdict) -> None:
        if verdict is Verdict.STRICT:
            self.strict += 1
        elif verdict is Verdict.EQUALITY:
            self.equality += 1
        elif verdict is Verdict.VIOLATED:
            self.violated += 1
        else:
            self.outside += 1

    @property
    def total(self) -> int:
        return self.strict + self.equality + self.violated + self.outside + self.overflow + self.errors

    def to_dict(self) -> Dict[str, int]:
        return {
            "strict": self.strict,
            "equality": self.equality,
            "violated": self.violated,
            "outside": self.outside,
            "overflow": self.overflow,
            "errors": self.errors,
        }


@dataclass(frozen=True)
class EntryReport:
    """Verdict counts for one descriptor over samples_per_entry seeded draws.

    `demoted` counts Violated verdicts that did not survive re-evaluation at
    elevated precision; those samples are counted under their elevated verdict.
    """

    name: str
    key: str
    side: str
    direction: str
    samples: int
    counts: VerdictCounts
    counterexamples: Tuple[Counterexample, ...] = ()
    boundary_samples: int = 0
    exact_samples: int = 0
    interior_equalities: int = 0
    demoted: int = 0
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counts.violated == 0 and self.counts.errors == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "key": self.key,
            "params": self.params,
            "side": self.side,
            "direction": self.direction,
            "samples": self.samples,
            "counts": self.counts.to_dict(),
            "boundary_samples": self.boundary_samples,
            "exact_samples": self.exact_samples,
            "interior_equalities": self.interior_equalities,
            "demoted": self.demoted,
            "passed": self.passed,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def _params_text(d: InequalityDescriptor) -> Dict[str, Any]:
    return {k: param_text(v) for k, v in sorted(d.params.items())}


def reverify(d: InequalityDescriptor, pt: Point, ctx: PrecisionContext) -> Optional[PointClassification]:
    """Classification at REVERIFY_FACTOR times the bits; None when it overflows there."""
    try:
        return classify(d, pt, ctx.elevated(REVERIFY_FACTOR))
    except Overflow:
        return None


def run_inequality_check(
    d: InequalityDescriptor,
    config: Optional[SuiteConfig] = None,
    *,
    plans: Sequence[Plan] = ({},),
    ctx: Optional[PrecisionContext] = None,
) -> EntryReport:
    """Classify samples_per_entry seeded points of d's validity set.

    Parameters are redrawn per sample from plans (cycled by index). Violated
    verdicts are re-evaluated at elevated precision before being recorded.
    """
    config = config or SuiteConfig.default()
    ctx = ctx or config.ctx
    plans = tuple(plans) or ({},)
    counts = VerdictCounts()
    counterexamples: List[Counterexample] = []
    boundary = exact = interior_equalities = demoted = 0
    for index in range(config.samples_per_entry):
        sample_seed = derive_seed(config.seed, d.key, index)
        rng = np.random.default_rng(sample_seed)
        try:
            descriptor = with_plan(d, plans[index % len(plans)], rng, ctx)
            pt, origin = draw_sample(
                descriptor,
                rng,
                ctx,
                boundary_fraction=config.boundary_fraction,
                boundary_eps=config.boundary_eps,
                exact_fraction=config.exact_fraction,
            )
            result = classify(descriptor, pt, ctx)
        except Overflow as exc:
            logger.debug("%s sample %d overflowed: %s", d.key, index, exc)
            counts.overflow += 1
            continue
        except ObservatoryError as exc:
            logger.warning("%s sample %d raised: %s", d.key, index, exc)
            counts.errors += 1
            continue
        boundary += origin is not SampleOrigin.INTERIOR
        exact += origin is SampleOrigin.EQUALITY
        verdict = result.verdict
        if verdict is Verdict.VIOLATED:
            elevated = reverify(descriptor, pt, ctx)
            if elevated is not None and elevated.verdict is not Verdict.VIOLATED:
                demoted += 1
                verdict = elevated.verdict
            else:
                logger.debug("%s sample %d violated with margin %s", descriptor.key, index, scalar_text(result.margin, 10))
                counterexamples.append(
                    Counterexample(descriptor.key, pt, result.margin, sample_seed, index, _params_text(descriptor))
                )
        if verdict is Verdict.EQUALITY and origin is SampleOrigin.INTERIOR:
            interior_equalities += 1
        counts.add(verdict)
    report = EntryReport(
        name=d.name,
        key=d.key,
        side=d.side.value,
        direction=d.direction.value,
        samples=config.samples_per_entry,
        counts=counts,
        counterexamples=tuple(counterexamples),
        boundary_samples=boundary,
        exact_samples=exact,
        interior_equalities=interior_equalities,
        demoted=demoted,
        params=_params_text(d),
    )
    logger.info("%s: %s", d.key, ", ".join(f"{k}={v}" for k, v in counts.to_dict().items()))
    return report


def _relative(result: PointClassification) -> Scalar:
    return result.margin / result.scale


def _evaluate(d: InequalityDescriptor, pt: Point, ctx: PrecisionContext) -> Optional[PointClassification]:
    try:
        result = classify(d, pt, ctx)
    except ObservatoryError:
        return None
    return None if result.verdict is Verdict.OUTSIDE else result


def _coordinates(pt: Point) -> List[Coordinate]:
    coords: List[Coordinate] = list(range(len(pt.scalars)))
    for slot, t in enumerate(pt.tuples):
        coords.extend((slot, i) for i in range(t.n))
    return coords


def _step(pt: Point, coord: Coordinate, factor: Scalar) -> Point:
    """Multiply one coordinate by factor; raises InvalidTuple if a tuple leaves its value range."""
    if isinstance(coord, int):
        return pt.replace_scalar(coord, pt.scalars[coord] * factor)
    slot, i = coord
    values = list(pt.tuples[slot].values)
    values[i] = values[i] * factor
    return pt.replace_tuple(slot, pt.tuples[slot].with_values(values))


def _confirmed(
    d: InequalityDescriptor, pt: Point, result: PointClassification, seed: int, index: int, ctx: PrecisionContext
) -> Optional[Counterexample]:
    if result.verdict is not Verdict.VIOLATED:
        return None
    elevated = reverify(d, pt, ctx)
    if elevated is not None and elevated.verdict is not Verdict.VIOLATED:
        return None
    return Counterexample(d.key, pt, result.margin, seed, index, _params_text(d))


def search_violation(
    d: InequalityDescriptor,
    budget: int,
    seed: int,
    ctx: Optional[PrecisionContext] = None,
    *,
    plans: Sequence[Plan] = ({},),
    boundary_fraction: float = 0.25,
) -> Optional[Counterexample]:
    """Random search, then multiplicative coordinate descent on the relative margin.

    Half the budget goes to random draws (a share of them near the equality
    set, where reversed statements fail first); the rest descends from the
    smallest margin seen, stepping each coordinate by (1 +- delta) and halving
    delta after a pass without improvement.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1.")
    ctx = ctx or PrecisionContext()
    plans = tuple(plans) or ({},)
    best: Optional[Tuple[Scalar, InequalityDescriptor, Point, int]] = None
    spent = 0
    for index in range(max(1, budget // 2)):
        sample_seed = derive_seed(seed, d.key, "search", index)
        rng = np.random.default_rng(sample_seed)
        spent += 1
        try:
            descriptor = with_plan(d, plans[index % len(plans)], rng, ctx)
            pt, _ = draw_sample(descriptor, rng, ctx, boundary_fraction=boundary_fraction, boundary_eps=1e-3)
        except ObservatoryError:
            continue
        result = _evaluate(descriptor, pt, ctx)
        if result is None:
            continue
        found = _confirmed(descriptor, pt, result, sample_seed, index, ctx)
        if found is not None:
            logger.info("%s: violation after %d random draw(s)", d.key, index + 1)
            return found
        if best is None or _relative(result) < best[0]:
            best = (_relative(result), descriptor, pt, sample_seed)
    if best is None:
        return None
    margin, descriptor, pt, start_seed = best
    delta = ctx.mp.mpf(INITIAL_STEP)
    while spent < budget and delta > MIN_STEP:
        improved = False
        for coord in _coordinates(pt):
            for factor in (1 + delta, 1 - delta):
                if spent >= budget:
                    break
                spent += 1
                try:
                    candidate = _step(pt, coord, factor)
                except ObservatoryError:
                    continue
                result = _evaluate(descriptor, candidate, ctx)
                if result is None:
                    continue
                found = _confirmed(descriptor, candidate, result, start_seed, spent, ctx)
                if found is not None:
                    logger.info("%s: violation after %d evaluation(s)", d.key, spent)
                    return found
                if _relative(result) < margin:
                    margin, pt, improved = _relative(result), candidate, True
        if not improved:
            delta /= 2
    logger.info("%s: no violation within budget %d", d.key, budget)
    return None
