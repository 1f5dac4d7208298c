"""Random draws used by entry samplers and E-point generators."""

from __future__ import annotations

from typing import Any, Dict, List, Mapping, Sequence

import numpy as np

from ..means import WeightedTuple
from ..numerics import PrecisionContext, Scalar
from ..utils.hashing import derive_seed

LOG_LOW = 1e-3
LOG_HIGH = 1e3


def uniform(rng: np.random.Generator, ctx: PrecisionContext, low: float, high: float) -> Scalar:
    mp = ctx.mp
    return mp.mpf(low) + (mp.mpf(high) - mp.mpf(low)) * mp.mpf(float(rng.random()))


def log_uniform(
    rng: np.random.Generator,
    ctx: PrecisionContext,
    low: float = LOG_LOW,
    high: float = LOG_HIGH,
) -> Scalar:
    """Positive scalar uniform in log over [low, high]."""
    mp = ctx.mp
    lo, hi = mp.log(mp.mpf(low)), mp.log(mp.mpf(high))
    return mp.exp(lo + (hi - lo) * mp.mpf(float(rng.random())))


def signed_log_uniform(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    value = log_uniform(rng, ctx)
    return value if rng.random() < 0.5 else -value


def above_minus_one(rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
    """x > -1, half the draws in (-1, 0)."""
    if rng.random() < 0.5:
        return log_uniform(rng, ctx, LOG_LOW, 1.0) - 1
    return log_uniform(rng, ctx)


def integer(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in [low, high]."""
    return int(rng.integers(low, high + 1))


def exponent_outside_unit(rng: np.random.Generator, ctx: PrecisionContext, closed: bool = False) -> Scalar:
    """Exponent in [-5, 0) or (1, 6]; with closed=True the endpoints 0 and 1 may be hit."""
    if rng.random() < 0.5:
        value = -uniform(rng, ctx, 1e-3, 5.0)
    else:
        value = 1 + uniform(rng, ctx, 1e-3, 5.0)
    if closed and rng.random() < 0.05:
        return ctx.mp.mpf(0 if value < 0 else 1)
    return value


def unit_exponent(rng: np.random.Generator, ctx: PrecisionContext, margin: float = 0.0) -> Scalar:
    """Exponent in [margin, 1 - margin]."""
    return uniform(rng, ctx, margin, 1.0 - margin)


def positive_values(rng: np.random.Generator, ctx: PrecisionContext, n: int) -> List[Scalar]:
    return [log_uniform(rng, ctx) for _ in range(n)]


def positive_weights(rng: np.random.Generator, ctx: PrecisionContext, n: int) -> List[Scalar]:
    return [log_uniform(rng, ctx) for _ in range(n)]


def unit_weights(ctx: PrecisionContext, n: int) -> List[Scalar]:
    return [ctx.mp.mpf(1) for _ in range(n)]


def weighted_tuple(
    rng: np.random.Generator,
    ctx: PrecisionContext,
    n: int,
    *,
    weighted: bool = True,
) -> WeightedTuple:
    values = positive_values(rng, ctx, n)
    weights = positive_weights(rng, ctx, n) if weighted else unit_weights(ctx, n)
    return WeightedTuple(tuple(values), tuple(weights))


def constant_tuple(
    rng: np.random.Generator,
    ctx: PrecisionContext,
    n: int,
    *,
    weighted: bool = True,
) -> WeightedTuple:
    value = log_uniform(rng, ctx)
    weights = positive_weights(rng, ctx, n) if weighted else unit_weights(ctx, n)
    return WeightedTuple(tuple(value for _ in range(n)), tuple(weights))


def bump_first(t: WeightedTuple, eps: float, ctx: PrecisionContext) -> WeightedTuple:
    """Scale the first value by (1 + eps)."""
    values = list(t.values)
    values[0] = values[0] * (1 + ctx.mp.mpf(eps))
    return t.with_values(values)


def bump(value: Scalar, eps: float, ctx: PrecisionContext) -> Scalar:
    return value * (1 + ctx.mp.mpf(eps))


def proportional(values: Sequence[Scalar], factor: Scalar) -> List[Scalar]:
    return [factor * v for v in values]


def rng_for(seed: int, *labels: Any) -> np.random.Generator:
    """Independent generator for (seed, labels); stable across runs and worker schedules."""
    return np.random.default_rng(derive_seed(seed, *labels))


def draw_params(plan: Mapping[str, Any], rng: np.random.Generator, ctx: PrecisionContext) -> Dict[str, Any]:
    """Resolve a parameter plan: (low, high) pairs are drawn uniformly, anything else is fixed."""
    params: Dict[str, Any] = {}
    for name in sorted(plan):
        value = plan[name]
        if isinstance(value, (tuple, list)) and len(value) == 2:
            params[name] = uniform(rng, ctx, float(value[0]), float(value[1]))
        else:
            params[name] = value
    return params
