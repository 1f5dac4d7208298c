"""Analysis suites run alongside the sampled entry checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..catalog import Point, Verdict, classify, lookup
from ..errors import GridOutsideDomain
from ..means import (
    PopoviciuConvention,
    WeightedTuple,
    arithmetic_mean,
    geometric_mean,
    popoviciu_sequence,
    power_mean,
    rado_sequence,
)
from ..numerics import PrecisionContext, Scalar, SignClass, classify_sign, exp_scalar, pow_scalar
from ..transforms import reduced_margin
from ..utils.serialization import scalar_text

logger = logging.getLogger(__name__)

# ascending; index 3 and 4 straddle 0
LIMIT_GRID = ("-1e4", "-1e2", "-1", "-1e-6", "1e-6", "1", "1e2", "1e4")
CONSISTENCY_TOLERANCE = "1e-20"


@dataclass(frozen=True)
class LimitReport:
    """Power means on the exponent grid against max, min and G."""

    grid: Tuple[Tuple[Scalar, Scalar], ...]
    max_ok: bool
    min_ok: bool
    geometric_ok: bool
    monotone: bool

    @property
    def passed(self) -> bool:
        return self.max_ok and self.min_ok and self.geometric_ok and self.monotone

    def to_dict(self) -> Dict[str, Any]:
        return {
            "grid": [[scalar_text(r), scalar_text(v)] for r, v in self.grid],
            "max_ok": self.max_ok,
            "min_ok": self.min_ok,
            "geometric_ok": self.geometric_ok,
            "monotone": self.monotone,
            "passed": self.passed,
        }


def _within(value: Scalar, target: Scalar, tolerance: Scalar, ctx: PrecisionContext) -> bool:
    return ctx.mp.fabs(value - target) <= tolerance * ctx.mp.fabs(target)


def check_power_mean_limits(t: WeightedTuple, tolerance: Any = "1e-4", ctx: Optional[PrecisionContext] = None) -> LimitReport:
    """Evaluate M^[r] on +-1e-6, +-1, +-1e2, +-1e4; Overflow propagates."""
    ctx = ctx or PrecisionContext()
    t = t.at_precision(ctx)
    tol = ctx.mp.mpf(tolerance)
    grid = tuple((ctx.mp.mpf(r), power_mean(ctx.mp.mpf(r), t, ctx)) for r in LIMIT_GRID)
    g = geometric_mean(t, ctx)
    monotone = all(
        classify_sign(upper - lower, ctx.scale_of(lower, upper), ctx) is not SignClass.NEGATIVE
        for (_, lower), (_, upper) in zip(grid, grid[1:])
    )
    return LimitReport(
        grid=grid,
        max_ok=_within(grid[-1][1], max(t.values), tol, ctx),
        min_ok=_within(grid[0][1], min(t.values), tol, ctx),
        geometric_ok=_within(grid[3][1], g, tol, ctx) and _within(grid[4][1], g, tol, ctx),
        monotone=monotone,
    )


class MonotoneFamily(str, Enum):
    """f(x) = (1+a/x)^x increases on each interval of S; g(x) = (1+a/x)^(x+a) decreases."""

    F = "F"
    G = "G"


def family_value(family: MonotoneFamily, a: Scalar, x: Scalar, ctx: PrecisionContext) -> Scalar:
    base = 1 + a / x
    exponent = x if MonotoneFamily(family) is MonotoneFamily.F else x + a
    return pow_scalar(base, exponent, ctx)


def split_domain(a: Scalar, grid: Sequence[Any], ctx: PrecisionContext) -> Tuple[List[Scalar], List[Scalar]]:
    """Sorted (left, right) parts of grid in S = (-inf, min(0,-a)) u (max(0,-a), inf)."""
    a = ctx.mp.mpf(a)
    low, high = min(0, -a), max(0, -a)
    left: List[Scalar] = []
    right: List[Scalar] = []
    for raw in grid:
        x = ctx.scalar(raw)
        if x < low:
            left.append(x)
        elif x > high:
            right.append(x)
        else:
            raise GridOutsideDomain(
                f"Grid point {scalar_text(x, 10)} lies in [{scalar_text(low, 10)}, {scalar_text(high, 10)}], outside S."
            )
    return sorted(left), sorted(right)


def monotonicity_grid(a: Any, depth: int = 20, ctx: Optional[PrecisionContext] = None) -> List[Scalar]:
    """Geometric grid on both intervals of S, including the tail points +-1e6*max(1,|a|)."""
    ctx = ctx or PrecisionContext()
    a = ctx.mp.mpf(a)
    unit = max(ctx.mp.mpf(1), ctx.mp.fabs(a))
    low, high = min(0, -a), max(0, -a)
    tail = 10**6 * unit
    right = [high + unit * 2**k for k in range(depth + 1)] + [tail]
    left = [low - unit * 2**k for k in range(depth + 1)] + [-tail]
    return left + right


@dataclass(frozen=True)
class MonotonicityReport:
    family: MonotoneFamily
    a: Scalar
    points: int
    monotone: bool
    cross_ordered: bool
    converging: bool
    tail_error: Scalar
    tail_ok: bool

    @property
    def passed(self) -> bool:
        return self.monotone and self.cross_ordered and self.converging and self.tail_ok

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "a": scalar_text(self.a),
            "points": self.points,
            "monotone": self.monotone,
            "cross_ordered": self.cross_ordered,
            "converging": self.converging,
            "tail_error": scalar_text(self.tail_error),
            "tail_ok": self.tail_ok,
            "passed": self.passed,
        }


def _strictly(values: List[Scalar], increasing: bool, ctx: PrecisionContext) -> bool:
    expected = SignClass.POSITIVE if increasing else SignClass.NEGATIVE
    return all(classify_sign(b - a, ctx.scale_of(a, b), ctx) is expected for a, b in zip(values, values[1:]))


def _constant(values: List[Scalar], target: Scalar, ctx: PrecisionContext) -> bool:
    return all(ctx.approx_equal(v, target) for v in values)


def check_function_monotonicity(
    family: MonotoneFamily,
    a: Any,
    grid: Sequence[Any],
    ctx: Optional[PrecisionContext] = None,
    *,
    tail_tolerance: Optional[Any] = None,
) -> MonotonicityReport:
    """Monotonicity on each interval of S, cross-interval ordering and convergence to e^a.

    a = 0 degenerates to the constant 1, which is checked instead of strictness.
    """
    ctx = ctx or PrecisionContext()
    family = MonotoneFamily(family)
    a = ctx.scalar(a)
    left, right = split_domain(a, grid, ctx)
    limit = exp_scalar(a, ctx)
    left_values = [family_value(family, a, x, ctx) for x in left]
    right_values = [family_value(family, a, x, ctx) for x in right]
    increasing = family is MonotoneFamily.F
    if a == 0:
        monotone = _constant(left_values + right_values, limit, ctx)
        cross = True
    else:
        monotone = _strictly(left_values, increasing, ctx) and _strictly(right_values, increasing, ctx)
        if left_values and right_values:
            cross = min(left_values) > max(right_values) if increasing else max(left_values) < min(right_values)
        else:
            cross = True
    # Distances to e^a shrink toward -inf on the left and +inf on the right.
    left_gaps = [ctx.mp.fabs(v - limit) for v in reversed(left_values)]
    right_gaps = [ctx.mp.fabs(v - limit) for v in right_values]
    converging = all(
        classify_sign(prev - nxt, ctx.scale_of(prev, nxt), ctx) is not SignClass.NEGATIVE
        for gaps in (left_gaps, right_gaps)
        for prev, nxt in zip(gaps, gaps[1:])
    )
    tails = [gaps[-1] for gaps in (left_gaps, right_gaps) if gaps]
    tail_error = max(tails) if tails else ctx.mp.mpf(0)
    tail_ok = tail_tolerance is None or tail_error <= ctx.mp.mpf(tail_tolerance)
    report = MonotonicityReport(family, a, len(left) + len(right), monotone, cross, converging, tail_error, tail_ok)
    logger.debug("monotonicity %s a=%s passed=%s", family.value, scalar_text(a, 6), report.passed)
    return report


@dataclass(frozen=True)
class ChainReport:
    """A prefix sequence checked link by link at elevated precision."""

    kind: str
    n: int
    precision_bits: int
    values: Tuple[Scalar, ...]
    equal_links: Tuple[int, ...] = ()
    broken_links: Tuple[int, ...] = ()
    convention: Optional[PopoviciuConvention] = None

    @property
    def passed(self) -> bool:
        return not self.broken_links

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "kind": self.kind,
            "n": self.n,
            "precision_bits": self.precision_bits,
            "values": [scalar_text(v) for v in self.values],
            "equal_links": list(self.equal_links),
            "broken_links": list(self.broken_links),
            "passed": self.passed,
        }
        if self.convention is not None:
            payload["convention"] = self.convention.value
        return payload


def _links(
    values: List[Scalar], on_equality: List[bool], ctx: PrecisionContext
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Link k (1-based, from k to k+1) must rise strictly, or stay level where the step is an equality point."""
    equal: List[int] = []
    broken: List[int] = []
    for k, (lower, upper) in enumerate(zip(values, values[1:]), start=1):
        sign = classify_sign(upper - lower, ctx.scale_of(lower, upper), ctx)
        if sign is SignClass.POSITIVE:
            continue
        if sign is SignClass.ZERO and on_equality[k - 1]:
            equal.append(k)
        else:
            broken.append(k)
    return tuple(equal), tuple(broken)


def check_rado_chain(t: WeightedTuple, ctx: Optional[PrecisionContext] = None, *, factor: int = 4) -> ChainReport:
    """rado_gap(t, k) increasing in k; level only where a_{k+1} = G_k."""
    ctx = (ctx or PrecisionContext()).elevated(factor)
    t = t.at_precision(ctx)
    values = rado_sequence(t, ctx)
    on_equality = [ctx.approx_equal(t.values[k], geometric_mean(t.prefix(k), ctx)) for k in range(1, t.n)]
    equal, broken = _links(values, on_equality, ctx)
    return ChainReport("rado", t.n, ctx.precision_bits, tuple(values), equal, broken)


def check_popoviciu_chain(
    t: WeightedTuple,
    convention: PopoviciuConvention = PopoviciuConvention.EXPONENT_WK,
    ctx: Optional[PrecisionContext] = None,
    *,
    factor: int = 4,
) -> ChainReport:
    """Popoviciu ratios nondecreasing in k; level only where a_{k+1} = A_k."""
    ctx = (ctx or PrecisionContext()).elevated(factor)
    convention = PopoviciuConvention(convention)
    t = t.at_precision(ctx)
    values = popoviciu_sequence(t, convention, ctx)
    on_equality = [ctx.approx_equal(t.values[k], arithmetic_mean(t.prefix(k), ctx)) for k in range(1, t.n)]
    equal, broken = _links(values, on_equality, ctx)
    if broken:
        logger.debug("popoviciu %s chain broken at %s", convention.value, broken)
    return ChainReport("popoviciu", t.n, ctx.precision_bits, tuple(values), equal, broken, convention)


@dataclass(frozen=True)
class ConsistencyReport:
    """GA_m margin computed directly and through backward_reduce."""

    n: int
    m: int
    direct_verdict: Verdict
    reduced_verdict: Verdict
    direct_margin: Scalar
    reduced_margin: Scalar
    relative_error: Scalar

    @property
    def passed(self) -> bool:
        if self.direct_verdict is not self.reduced_verdict:
            return False
        return self.direct_verdict is Verdict.EQUALITY or self.relative_error <= float(CONSISTENCY_TOLERANCE)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "direct_verdict": self.direct_verdict.value,
            "reduced_verdict": self.reduced_verdict.value,
            "direct_margin": scalar_text(self.direct_margin),
            "reduced_margin": scalar_text(self.reduced_margin),
            "relative_error": scalar_text(self.relative_error, 6),
            "passed": self.passed,
        }


_SIGN_VERDICTS = {
    SignClass.POSITIVE: Verdict.STRICT,
    SignClass.ZERO: Verdict.EQUALITY,
    SignClass.NEGATIVE: Verdict.VIOLATED,
}


def check_backward_consistency(t: WeightedTuple, m: int, ctx: Optional[PrecisionContext] = None) -> ConsistencyReport:
    """Compare classify(GAN(m)) on the prefix with the margin recovered from GA_n of the reduced tuple."""
    ctx = ctx or PrecisionContext()
    t = t.at_precision(ctx)
    head = t.prefix(m)
    direct = classify(lookup("GAN", {"n": m}, ctx), Point(tuples=(head,)), ctx)
    recovered = reduced_margin(t, m, ctx)
    scale = ctx.scale_of(arithmetic_mean(head, ctx), geometric_mean(head, ctx))
    reduced_verdict = _SIGN_VERDICTS[classify_sign(recovered, scale, ctx)]
    if direct.margin == 0:
        error = ctx.mp.fabs(recovered)
    else:
        error = ctx.mp.fabs(recovered / direct.margin - 1)
    return ConsistencyReport(t.n, m, direct.verdict, reduced_verdict, direct.margin, recovered, error)
