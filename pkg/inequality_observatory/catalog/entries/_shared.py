"""Helpers shared by entry modules."""

from __future__ import annotations

from typing import Sequence

from ...means import WeightedTuple
from ...numerics import PrecisionContext, Scalar


def unit(t: WeightedTuple, ctx: PrecisionContext) -> WeightedTuple:
    """Same values with every weight set to one."""
    one = ctx.mp.mpf(1)
    return WeightedTuple(t.values, tuple(one for _ in t.values))


def constant(values: Sequence[Scalar], ctx: PrecisionContext) -> bool:
    return all(ctx.approx_equal(v, values[0]) for v in values[1:])


def proportional(a: Sequence[Scalar], b: Sequence[Scalar], ctx: PrecisionContext) -> bool:
    """b = c*a for a single c > 0."""
    ratios = [bi / ai for ai, bi in zip(a, b)]
    return constant(ratios, ctx)


def positive(values: Sequence[Scalar]) -> bool:
    return all(v > 0 for v in values)


def same_weights(first: WeightedTuple, second: WeightedTuple, ctx: PrecisionContext) -> bool:
    return len(first.weights) == len(second.weights) and all(
        ctx.approx_equal(u, v) for u, v in zip(first.weights, second.weights)
    )
