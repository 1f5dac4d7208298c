"""Witnesses among the Hölder, Minkowski, Radon and Liapunov forms."""

from __future__ import annotations

from typing import Callable, Iterable, Tuple

from ...catalog import Params, Point, lookup
from ...catalog.entries.holder import power_norm
from ...means import WeightedTuple, conjugate_index
from ...numerics import PrecisionContext, Scalar, pow_scalar
from ..constructions import holder_to_liapunov, liapunov_to_holder
from ..registry import register_witness
from ..types import Derivation, EquivalenceWitness, PointMap, WitnessKind

_N_PLANS = {"n": 3}

ExponentFn = Callable[[Params, PrecisionContext], Scalar]


def _unit(values: Iterable[Scalar], ctx: PrecisionContext) -> WeightedTuple:
    values = tuple(values)
    return WeightedTuple(values, tuple(ctx.mp.mpf(1) for _ in values))


def _powered(t: WeightedTuple, exponent: Scalar, ctx: PrecisionContext) -> WeightedTuple:
    return t.with_values([pow_scalar(v, exponent, ctx) for v in t.values])


def minkowski_from_holder(pt: Point, wp: Params, ctx: PrecisionContext) -> Derivation:
    """Split sum (a+b)^p as sum a(a+b)^(p-1) + sum b(a+b)^(p-1) and bound each by Hölder."""
    a, b = (_unit(t.values, ctx) for t in pt.tuples)
    p = ctx.mp.mpf(wp["p"])
    q = conjugate_index(p, ctx)
    sums = [x + y for x, y in zip(a.values, b.values)]
    c = _unit([pow_scalar(v, p - 1, ctx) for v in sums], ctx)
    total = ctx.mp.fsum(pow_scalar(v, p, ctx) for v in sums)
    holder = lookup("HOLDER", {"n": a.n, "p": p}, ctx)
    split = (ctx.mp.fdot(a.values, c.values) + ctx.mp.fdot(b.values, c.values)) / pow_scalar(total, 1 / q, ctx)
    chain = (pow_scalar(total, 1 / p, ctx), split, power_norm(a, p, ctx) + power_norm(b, p, ctx))
    premises = ((holder, Point(tuples=(a, c))), (holder, Point(tuples=(b, c))))
    return Derivation(premises, chain)


W_HOLDER_MINK = register_witness(
    EquivalenceWitness(
        name="W_HOLDER_MINK",
        source="HOLDER",
        target="MINKOWSKI",
        reference="Thm 6.1",
        description="Minkowski from two Hölder instances against c = (a+b)^(p-1)",
        kind=WitnessKind.DERIVATION,
        derive=minkowski_from_holder,
        params={**_N_PLANS, "p": 2},
        plans=({"p": (1.2, 6.0)},),
        source_params=lambda wp: {"n": wp["n"], "p": wp["p"]},
        target_params=lambda wp: {"n": wp["n"], "p": wp["p"]},
    )
)


def _with_unit_weights(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    return Point(tuples=tuple(_unit(t.values, ctx) for t in pt.tuples))


def _absorb(first_exponent: ExponentFn, second_exponent: ExponentFn) -> PointMap:
    """(a, b; w) -> (w^e1 a, w^e2 b) with unit weights."""

    def absorb(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
        a, b = pt.tuples
        e1, e2 = first_exponent(wp, ctx), second_exponent(wp, ctx)
        first = [pow_scalar(w, e1, ctx) * v for w, v in zip(a.weights, a.values)]
        second = [pow_scalar(w, e2, ctx) * v for w, v in zip(a.weights, b.values)]
        return Point(tuples=(_unit(first, ctx), _unit(second, ctx)))

    return absorb


def _inverse_p(wp: Params, ctx: PrecisionContext) -> Scalar:
    return 1 / ctx.mp.mpf(wp["p"])


def _inverse_q(wp: Params, ctx: PrecisionContext) -> Scalar:
    return 1 / conjugate_index(wp["p"], ctx)


def _same_p(wp: Params) -> Params:
    return {"n": wp["n"], "p": wp["p"]}


W_WEIGHT_ABSORB = register_witness(
    EquivalenceWitness(
        name="W_WEIGHT_ABSORB",
        source="HOLDER",
        target="HOLDER_W",
        reference="Sec 6.6.1",
        description="unit weights one way; w^(1/p) a and w^(1/p') b the other",
        forward=_with_unit_weights,
        backward=_absorb(_inverse_p, _inverse_q),
        params={**_N_PLANS, "p": 2},
        plans=({"p": (1.2, 6.0)},),
        source_params=_same_p,
        target_params=_same_p,
        target_round_trip=False,
    )
)

W_WEIGHT_ABSORB_MINK = register_witness(
    EquivalenceWitness(
        name="W_WEIGHT_ABSORB_MINK",
        source="MINKOWSKI",
        target="MINKOWSKI_W",
        reference="Sec 6.6.1",
        description="unit weights one way; w^(1/p) a and w^(1/p) b the other",
        forward=_with_unit_weights,
        backward=_absorb(_inverse_p, _inverse_p),
        params={**_N_PLANS, "p": 2},
        plans=({"p": (1.0, 6.0)},),
        source_params=_same_p,
        target_params=_same_p,
        target_round_trip=False,
    )
)


def _to_radon(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    a, b = pt.tuples
    p = ctx.mp.mpf(wp["p"])
    return Point(tuples=(_powered(_unit(a.values, ctx), p, ctx), _powered(_unit(b.values, ctx), conjugate_index(p, ctx), ctx)))


def _from_radon(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    a, b = pt.tuples
    p = ctx.mp.mpf(wp["p"])
    return Point(tuples=(_powered(a, 1 / p, ctx), _powered(b, 1 / conjugate_index(p, ctx), ctx)))


W_RADON_MAP = register_witness(
    EquivalenceWitness(
        name="W_RADON_MAP",
        source="HOLDER",
        target="RADON",
        reference="Sec 6.6.2",
        description="s = 1/p with (A, B) -> (A^p, B^p')",
        forward=_to_radon,
        backward=_from_radon,
        params={**_N_PLANS, "p": 2},
        plans=({"p": (1.2, 6.0)},),
        source_params=_same_p,
        target_params=lambda wp: {"n": wp["n"], "s": 1 / wp["p"]},
    )
)


def _exponents(wp: Params, ctx: PrecisionContext) -> Tuple[Scalar, ...]:
    return ctx.scalars((wp["r"], wp["s"], wp["t"]))


def _liapunov_forward(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    r, s, t = _exponents(wp, ctx)
    _, a, b = liapunov_to_holder(r, s, t, pt.tuples[0], ctx)
    return Point(tuples=(a, b))


def _liapunov_backward(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    r, s, t = _exponents(wp, ctx)
    a, b = pt.tuples
    return Point(tuples=(holder_to_liapunov(r, s, t, a, b, ctx),))


def _liapunov_p(wp: Params) -> Params:
    r, s, t = wp["r"], wp["s"], wp["t"]
    return {"n": wp["n"], "p": (r - t) / (r - s)}


W_LIAPUNOV_MAP = register_witness(
    EquivalenceWitness(
        name="W_LIAPUNOV_MAP",
        source="LIAPUNOV",
        target="HOLDER_EXT_W",
        reference="Sec 6.6.3.1",
        description="p = (r-t)/(r-s), a = x^(t/p), b = x^(r/p') with the weights carried over",
        forward=_liapunov_forward,
        backward=_liapunov_backward,
        params={**_N_PLANS, "r": 3, "s": 2, "t": 1},
        plans=(
            {"t": (-3.0, -1.0), "s": (-0.5, 0.5), "r": (1.0, 3.0)},
            {"r": (-3.0, -1.0), "t": (-0.5, 0.5), "s": (1.0, 3.0)},
            {"s": (-3.0, -1.0), "r": (-0.5, 0.5), "t": (1.0, 3.0)},
        ),
        source_params=lambda wp: {"n": wp["n"], "r": wp["r"], "s": wp["s"], "t": wp["t"]},
        target_params=_liapunov_p,
        target_round_trip=False,
    )
)

