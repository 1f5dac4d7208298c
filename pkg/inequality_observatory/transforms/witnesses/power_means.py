"""Witnesses reducing power-mean comparisons to the arithmetic case."""

from __future__ import annotations

from typing import Any

from ...catalog import Params, Point
from ...errors import IdentityViolation
from ...means import power_mean
from ...numerics import PrecisionContext, pow_scalar
from ..registry import register_witness
from ..types import EquivalenceWitness


def _power_values(pt: Point, exponent: Any, ctx: PrecisionContext) -> Point:
    (a,) = pt.tuples
    return Point(tuples=(a.with_values([pow_scalar(v, exponent, ctx) for v in a.values]),))


def _to_arithmetic(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    """b = a^r; asserts M^[s](a) = M^[s/r](b)^(1/r) on the way."""
    r, s = ctx.mp.mpf(wp["r"]), ctx.mp.mpf(wp["s"])
    mapped = _power_values(pt, r, ctx)
    direct = power_mean(s, pt.tuples[0], ctx)
    via = pow_scalar(power_mean(s / r, mapped.tuples[0], ctx), 1 / r, ctx)
    if not ctx.approx_equal(direct, via):
        raise IdentityViolation(f"M^[s](a) = M^[s/r](a^r)^(1/r) fails for r={r}, s={s}.")
    return mapped


W_POWER_IDENT = register_witness(
    EquivalenceWitness(
        name="W_POWER_IDENT",
        source="POWERMEAN",
        target="POWERMEAN",
        reference="Thm 5.1",
        description="b = a^r turns (r; s) with 0 < r < s into (1; s/r)",
        forward=_to_arithmetic,
        backward=lambda pt, wp, ctx: _power_values(pt, 1 / ctx.mp.mpf(wp["r"]), ctx),
        params={"n": 3, "r": 0.5, "s": 2},
        plans=({"r": (0.2, 1.5), "s": (2.0, 6.0)},),
        source_params=lambda wp: {"n": wp["n"], "r": wp["r"], "s": wp["s"]},
        target_params=lambda wp: {"n": wp["n"], "r": 1, "s": wp["s"] / wp["r"]},
    )
)

W_POWER_REFLECT = register_witness(
    EquivalenceWitness(
        name="W_POWER_REFLECT",
        source="POWERMEAN",
        target="POWERMEAN",
        reference="Thm 5.1",
        description="b = 1/a turns (r; s) with r < s < 0 into (-s; -r)",
        forward=lambda pt, wp, ctx: _power_values(pt, -1, ctx),
        backward=lambda pt, wp, ctx: _power_values(pt, -1, ctx),
        params={"n": 3, "r": -2, "s": -1},
        plans=({"r": (-6.0, -2.5), "s": (-2.0, -0.1)},),
        source_params=lambda wp: {"n": wp["n"], "r": wp["r"], "s": wp["s"]},
        target_params=lambda wp: {"n": wp["n"], "r": -wp["s"], "s": -wp["r"]},
    )
)
