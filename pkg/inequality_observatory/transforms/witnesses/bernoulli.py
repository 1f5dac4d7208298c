"""Witnesses among the Bernoulli forms and their rewritings."""

from __future__ import annotations

from ...catalog import Params, Point
from ...means import SignedTuple
from ...numerics import PrecisionContext
from ..registry import register_witness
from ..types import EquivalenceWitness


def reflect(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    """(x, alpha) -> (-x/(1+x), 1-alpha); an involution."""
    x, alpha = pt.scalars
    return Point((-x / (1 + x), 1 - alpha))


def _strict_unit(pt: Point, wp: Params, ctx: PrecisionContext) -> bool:
    return 0 < pt.scalars[1] < 1


def _positive_alpha(pt: Point, wp: Params, ctx: PrecisionContext) -> bool:
    return pt.scalars[1] > 0


def _reciprocal(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, alpha = pt.scalars
    return Point((alpha * x, 1 / alpha))


W_REFLECT = register_witness(
    EquivalenceWitness(
        name="W_REFLECT",
        source="BERNOULLI_B1",
        target="BERNOULLI_B2",
        reference="Thm 4.1.1",
        description="phi(x) = -x/(1+x) with alpha -> 1-alpha",
        forward=reflect,
        backward=reflect,
    )
)

W_RECIP = register_witness(
    EquivalenceWitness(
        name="W_RECIP",
        source="BERNOULLI_B1",
        target="BERNOULLI_B4",
        reference="Thm 4.1.2",
        description="(x, alpha) -> (alpha*x, 1/alpha); B1 with 0 < alpha < 1 against B4 with x >= 0",
        forward=_reciprocal,
        backward=_reciprocal,
        source_domain=_strict_unit,
        target_domain=lambda pt, wp, ctx: pt.scalars[0] >= 0,
    )
)

W_REFLECT_NEG = register_witness(
    EquivalenceWitness(
        name="W_REFLECT_NEG",
        source="BERNOULLI_B5",
        target="BERNOULLI_B4",
        reference="Thm 4.1.3",
        description="phi(x) = -x/(1+x) with alpha -> 1-alpha, carrying alpha < 0 to alpha > 1",
        forward=reflect,
        backward=reflect,
    )
)

W_SHIFT = register_witness(
    EquivalenceWitness(
        name="W_SHIFT",
        source="BERNOULLI_FULL",
        target="POWER_SECANT",
        reference="Ex 4.2.1.2",
        description="x -> 1+x",
        forward=lambda pt, wp, ctx: Point((1 + pt.scalars[0], pt.scalars[1])),
        backward=lambda pt, wp, ctx: Point((pt.scalars[0] - 1, pt.scalars[1])),
    )
)

W_RATIO = register_witness(
    EquivalenceWitness(
        name="W_RATIO",
        source="POWER_SECANT",
        target="GA2W",
        reference="Ex 4.2.2.1",
        description="x -> (1, x); (u, v) -> v/u",
        forward=lambda pt, wp, ctx: Point((ctx.mp.mpf(1), pt.scalars[0], pt.scalars[1])),
        backward=lambda pt, wp, ctx: Point((pt.scalars[1] / pt.scalars[0], pt.scalars[2])),
        source_domain=_strict_unit,
        target_round_trip=False,
    )
)


def _to_bush(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    y, alpha = pt.scalars
    return Point((alpha * y, alpha, ctx.mp.mpf(1)))


def _from_bush(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, p, q = pt.scalars
    return Point((x / p, p / q))


W_BUSH = register_witness(
    EquivalenceWitness(
        name="W_BUSH",
        source="BERNOULLI_B3",
        target="BUSH",
        reference="Ex 4.2.2.6",
        description="(y, alpha) -> (alpha*y, alpha, 1); (x, p, q) -> (x/p, p/q)",
        forward=_to_bush,
        backward=_from_bush,
        source_domain=_positive_alpha,
        target_domain=lambda pt, wp, ctx: pt.scalars[1] > 0 and pt.scalars[2] > 0,
        target_round_trip=False,
    )
)

W_RUTHING = register_witness(
    EquivalenceWitness(
        name="W_RUTHING",
        source="BERNOULLI_B3",
        target="RUTHING",
        reference="Sec 4.2.2.3",
        description="x -> (a, b) = (1, 1+x); (a, b) -> b/a - 1",
        forward=lambda pt, wp, ctx: Point((ctx.mp.mpf(1), 1 + pt.scalars[0], pt.scalars[1])),
        backward=lambda pt, wp, ctx: Point((pt.scalars[1] / pt.scalars[0] - 1, pt.scalars[2])),
        target_round_trip=False,
    )
)


def _constant_signed(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, alpha = pt.scalars
    n = int(wp["n"])
    return Point(tuples=(SignedTuple(tuple(x for _ in range(n)), tuple(alpha / n for _ in range(n))),))


W_PECARIC_SPECIALIZE = register_witness(
    EquivalenceWitness(
        name="W_PECARIC_SPECIALIZE",
        source="BERNOULLI_B3",
        target="PECARIC",
        reference="Sec 4.2.3",
        description="constant tuple x with weights alpha/n",
        forward=_constant_signed,
        source_domain=_positive_alpha,
        params={"n": 3},
        target_params=lambda wp: {"n": wp["n"]},
    )
)
