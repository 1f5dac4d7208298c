"""Rado gaps and Popoviciu ratios over tuple prefixes."""

from __future__ import annotations

from enum import Enum
from typing import List, Optional

from ..errors import BadIndex
from ..numerics import PrecisionContext, Scalar, pow_scalar
from .power import arithmetic_mean, geometric_mean
from .tuples import WeightedTuple


class PopoviciuConvention(str, Enum):
    """Exponent applied to the prefix ratio A_k/G_k."""

    EXPONENT_WK = "ExponentWk"
    EXPONENT_INV_WK = "ExponentInvWk"


def _check_index(t: WeightedTuple, k: int) -> None:
    if not 1 <= k <= t.n:
        raise BadIndex(f"Prefix index {k} outside 1..{t.n}.")


def rado_gap(t: WeightedTuple, k: int, ctx: Optional[PrecisionContext] = None) -> Scalar:
    """W_k (A_k - G_k) over the first k entries."""
    ctx = ctx or PrecisionContext()
    _check_index(t, k)
    if k == 1:
        return ctx.mp.mpf(0)
    prefix = t.prefix(k)
    return prefix.total_weight(ctx) * (arithmetic_mean(prefix, ctx) - geometric_mean(prefix, ctx))


def popoviciu_ratio(
    t: WeightedTuple,
    k: int,
    convention: PopoviciuConvention = PopoviciuConvention.EXPONENT_WK,
    ctx: Optional[PrecisionContext] = None,
) -> Scalar:
    """(A_k/G_k)^e with e = W_k or 1/W_k."""
    ctx = ctx or PrecisionContext()
    _check_index(t, k)
    if k == 1:
        return ctx.mp.mpf(1)
    prefix = t.prefix(k)
    total = prefix.total_weight(ctx)
    exponent = total if PopoviciuConvention(convention) is PopoviciuConvention.EXPONENT_WK else 1 / total
    ratio = arithmetic_mean(prefix, ctx) / geometric_mean(prefix, ctx)
    return pow_scalar(ratio, exponent, ctx)


def rado_sequence(t: WeightedTuple, ctx: Optional[PrecisionContext] = None) -> List[Scalar]:
    ctx = ctx or PrecisionContext()
    return [rado_gap(t, k, ctx) for k in range(1, t.n + 1)]


def popoviciu_sequence(
    t: WeightedTuple,
    convention: PopoviciuConvention = PopoviciuConvention.EXPONENT_WK,
    ctx: Optional[PrecisionContext] = None,
) -> List[Scalar]:
    ctx = ctx or PrecisionContext()
    return [popoviciu_ratio(t, k, convention, ctx) for k in range(1, t.n + 1)]
