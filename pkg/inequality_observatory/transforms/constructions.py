"""Tuple constructions used by the equivalence proofs."""

from __future__ import annotations

from typing import Optional, Tuple

from ..errors import BadIndex, DegenerateExponents, IdentityViolation
from ..means import WeightedTuple, arithmetic_mean, conjugate_index, geometric_mean
from ..numerics import PrecisionContext, Scalar, pow_scalar


def backward_reduce(t: WeightedTuple, m: int, ctx: Optional[PrecisionContext] = None) -> WeightedTuple:
    """Keep the first m values and replace the rest by their arithmetic mean A_m.

    Weights are unchanged, so A_n of the result equals A_m of t.
    """
    ctx = ctx or PrecisionContext()
    if not 2 <= m < t.n:
        raise BadIndex(f"backward_reduce needs 2 <= m < n, got m={m}, n={t.n}.")
    mean = arithmetic_mean(t.prefix(m), ctx)
    values = t.values[:m] + tuple(mean for _ in range(t.n - m))
    return WeightedTuple(values, t.weights)


def reduced_margin(t: WeightedTuple, m: int, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """A_m - G_m of the first m entries, recovered from G_n of backward_reduce(t, m).

    G_n(b)^(W_n) = G_m^(W_m) * A_m^(W_n - W_m) is solved for G_m.
    """
    ctx = ctx or PrecisionContext()
    b = backward_reduce(t, m, ctx)
    mean = arithmetic_mean(t.prefix(m), ctx)
    total = b.total_weight(ctx)
    head = t.prefix(m).total_weight(ctx)
    log_g = (total * ctx.mp.log(geometric_mean(b, ctx)) - (total - head) * ctx.mp.log(mean)) / head
    return mean - ctx.mp.exp(log_g)


def liapunov_exponent(r: Scalar, s: Scalar, t: Scalar, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
    """(p, p') = ((r-t)/(r-s), (r-t)/(s-t))."""
    if r == s or r == t or s == t:
        raise DegenerateExponents(f"r, s, t must be pairwise distinct, got r={r}, s={s}, t={t}.")
    mp = ctx.mp
    r, s, t = ctx.scalars((r, s, t))
    p = (r - t) / (r - s)
    q = (r - t) / (s - t)
    if not ctx.approx_equal((p - 1) * (q - 1), 1) or not ctx.approx_equal(q, conjugate_index(p, ctx)):
        raise IdentityViolation(f"(p-1)(p'-1) = 1 fails for p={mp.nstr(p, 10)}, p'={mp.nstr(q, 10)}.")
    return p, q


def liapunov_to_holder(
    r: Scalar,
    s: Scalar,
    t: Scalar,
    x: WeightedTuple,
    ctx: Optional[PrecisionContext] = None,
) -> Tuple[Scalar, WeightedTuple, WeightedTuple]:
    """Change of variables p = (r-t)/(r-s), a = x^(t/p), b = x^(r/p'); weights are carried over."""
    ctx = ctx or PrecisionContext()
    r, s, t = ctx.scalars((r, s, t))
    p, q = liapunov_exponent(r, s, t, ctx)
    a = x.with_values([pow_scalar(v, t / p, ctx) for v in x.values])
    b = x.with_values([pow_scalar(v, r / q, ctx) for v in x.values])
    for ai, bi, xi in zip(a.values, b.values, x.values):
        if not ctx.approx_equal(ai * bi, pow_scalar(xi, s, ctx)):
            raise IdentityViolation("a*b = x^s fails componentwise.")
    return p, a, b


def holder_to_liapunov(
    r: Scalar,
    s: Scalar,
    t: Scalar,
    a: WeightedTuple,
    b: WeightedTuple,
    ctx: Optional[PrecisionContext] = None,
) -> WeightedTuple:
    """Inverse change of variables: x = a^(-1/(r-s)) b^(1/(s-t)), w' = w a^(r/(r-s)) b^(-t/(s-t))."""
    ctx = ctx or PrecisionContext()
    r, s, t = ctx.scalars((r, s, t))
    liapunov_exponent(r, s, t, ctx)
    values = []
    weights = []
    for ai, bi, wi in zip(a.values, b.values, a.weights):
        values.append(pow_scalar(ai, -1 / (r - s), ctx) * pow_scalar(bi, 1 / (s - t), ctx))
        weights.append(wi * pow_scalar(ai, r / (r - s), ctx) * pow_scalar(bi, -t / (s - t), ctx))
    return WeightedTuple(tuple(values), tuple(weights))
