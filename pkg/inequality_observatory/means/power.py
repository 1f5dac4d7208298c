"""Weighted arithmetic, geometric, harmonic, quadratic and power means."""

from __future__ import annotations

from typing import Any, Optional

from ..errors import DegenerateExponents
from ..numerics import (
    ExtendedKind,
    ExtendedReal,
    PrecisionContext,
    Scalar,
    check_magnitude,
    exp_scalar,
    log_scalar,
    pow_scalar,
)
from .tuples import WeightedTuple


def _ctx(ctx: Optional[PrecisionContext]) -> PrecisionContext:
    return ctx or PrecisionContext()


def arithmetic_mean(t: WeightedTuple, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """(1/W) * sum(w_i a_i)."""
    ctx = _ctx(ctx)
    mp = ctx.mp
    total = mp.fsum(t.weights)
    return mp.fdot(t.weights, t.values) / total


def geometric_mean(t: WeightedTuple, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """exp((1/W) * sum(w_i log a_i)), computed in the log domain."""
    ctx = _ctx(ctx)
    mp = ctx.mp
    total = mp.fsum(t.weights)
    logs = [log_scalar(v, ctx) for v in t.values]
    return exp_scalar(mp.fdot(t.weights, logs) / total, ctx)


def harmonic_mean(t: WeightedTuple, ctx: Optional[PrecisionContext] = None) -> Scalar:
    ctx = _ctx(ctx)
    mp = ctx.mp
    return mp.fsum(t.weights) / mp.fsum(w / v for w, v in zip(t.weights, t.values))


def quadratic_mean(t: WeightedTuple, ctx: Optional[PrecisionContext] = None) -> Scalar:
    ctx = _ctx(ctx)
    mp = ctx.mp
    return mp.sqrt(mp.fsum(w * v * v for w, v in zip(t.weights, t.values)) / mp.fsum(t.weights))


def power_sum(t: WeightedTuple, r: Any, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """sum(w_i a_i^r), unnormalized."""
    ctx = _ctx(ctx)
    return ctx.mp.fsum(w * pow_scalar(v, r, ctx) for w, v in zip(t.weights, t.values))


def power_mean(r: Any, t: WeightedTuple, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """M^[r]: ((1/W) sum w_i a_i^r)^(1/r); r = 0 is G, r = +inf is max, r = -inf is min."""
    ctx = _ctx(ctx)
    exponent = ExtendedReal.parse(r, ctx)
    if exponent.kind is ExtendedKind.POS_INFINITY:
        return max(t.values)
    if exponent.kind is ExtendedKind.NEG_INFINITY:
        return min(t.values)
    value = ctx.mp.mpf(exponent.value)
    if value == 0:
        return geometric_mean(t, ctx)
    inner = power_sum(t, value, ctx) / ctx.mp.fsum(t.weights)
    return check_magnitude(pow_scalar(inner, 1 / value, ctx), ctx)


def conjugate_index(p: Any, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """p' with (p-1)(p'-1) = 1; the conjugate of 0 is 0 and 1 has none."""
    ctx = _ctx(ctx)
    p = ctx.mp.mpf(p)
    if p == 1:
        raise DegenerateExponents("The exponent 1 has no conjugate index.")
    if p == 0:
        return ctx.mp.mpf(0)
    return p / (p - 1)
