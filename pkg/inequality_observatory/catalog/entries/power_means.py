"""The power mean inequality M^[r] <= M^[s] for r < s."""

from __future__ import annotations

from typing import Tuple

import numpy as np

from ...errors import BadParams
from ...means import power_mean
from ...numerics import ExtendedReal, PrecisionContext, Scalar
from ..entry import InequalityEntry, Params
from ..registry import catalog_entry
from ..sampling import bump_first, constant_tuple, weighted_tuple
from ..types import Direction, ParamKind, ParamSpec, Point
from ._shared import constant


@catalog_entry()
class PowerMean(InequalityEntry):
    name = "POWERMEAN"
    reference = "Sec 5 (r;s)"
    statement = "M^[r](a; w) <= M^[s](a; w)"
    direction = Direction.LEQ
    tuple_names = ("a",)
    params = (
        ParamSpec("n", ParamKind.INTEGER, default=3, constraint="integer >= 2"),
        ParamSpec("r", ParamKind.EXTENDED, default=1, constraint="extended real, r < s"),
        ParamSpec("s", ParamKind.EXTENDED, default=2, constraint="extended real, s > r"),
    )
    validity_text = "a, w in P^n, r < s in the extended reals"
    equality_text = "a is constant"
    default_plans = (
        {"r": (-8.0, -0.1), "s": (0.1, 8.0)},
        {"r": (0.1, 2.0), "s": (2.5, 8.0)},
        {"r": (-8.0, -2.5), "s": (-2.0, -0.1)},
        {"r": 0, "s": (0.1, 8.0)},
        {"r": "-inf", "s": (-8.0, 8.0)},
        {"r": (-8.0, 8.0), "s": "inf"},
        {"r": "-inf", "s": "inf"},
    )

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        if params["n"] < 2:
            raise BadParams(f"POWERMEAN: n must be >= 2, got {params['n']}.")
        r: ExtendedReal = params["r"]
        s: ExtendedReal = params["s"]
        if not r < s:
            raise BadParams(f"POWERMEAN requires r < s, got r={r}, s={s}.")

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        (a,) = pt.tuples
        return power_mean(params["r"], a, ctx), power_mean(params["s"], a, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return pt.tuples[0].n == params["n"]

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return constant(pt.tuples[0].values, ctx)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point(tuples=(weighted_tuple(rng, ctx, params["n"]),))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        return Point(tuples=(bump_first(constant_tuple(rng, ctx, params["n"]), eps, ctx),))
