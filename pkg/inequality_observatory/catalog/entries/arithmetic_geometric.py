"""Arithmetic-geometric mean inequalities and their relatives."""

from __future__ import annotations

from typing import Tuple

import numpy as np

from ...errors import BadParams
from ...means import (
    PopoviciuConvention,
    WeightedTuple,
    arithmetic_mean,
    geometric_mean,
    popoviciu_ratio,
    rado_gap,
)
from ...numerics import PrecisionContext, Scalar, exp_scalar, int_pow, log_scalar, pow_scalar
from ..entry import InequalityEntry, Params
from ..registry import catalog_entry
from ..sampling import bump, bump_first, constant_tuple, log_uniform, uniform, weighted_tuple
from ..types import Direction, ParamKind, ParamSpec, Point
from ._shared import constant, unit

N_PARAM = ParamSpec("n", ParamKind.INTEGER, default=5, constraint="integer >= 2")


def _check_n(entry: InequalityEntry, params: Params) -> None:
    if params["n"] < 2:
        raise BadParams(f"{entry.name}: n must be >= 2, got {params['n']}.")


@catalog_entry()
class GA2E(InequalityEntry):
    name = "GA2E"
    reference = "Eq 3(1)"
    statement = "sqrt(x*y) <= (x + y)/2"
    direction = Direction.LEQ
    scalar_names = ("x", "y")
    validity_text = "x > 0 and y > 0"
    equality_text = "x = y"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, y = pt.scalars
        return ctx.mp.sqrt(x * y), (x + y) / 2

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y = pt.scalars
        return x > 0 and y > 0

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y = pt.scalars
        return ctx.approx_equal(x, y)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point((log_uniform(rng, ctx), log_uniform(rng, ctx)))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        x = log_uniform(rng, ctx)
        return Point((x, bump(x, eps, ctx)))


class _EqualWeightTuple(InequalityEntry):
    """Single unit-weight tuple of length n."""

    tuple_names = ("a",)
    params = (N_PARAM,)

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        _check_n(self, params)

    def _shape_ok(self, params: Params, pt: Point) -> bool:
        (a,) = pt.tuples
        return a.n == params["n"] and all(v > 0 for v in a.values)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return constant(pt.tuples[0].values, ctx)


@catalog_entry()
class GANE(_EqualWeightTuple):
    name = "GANE"
    reference = "Eq 3(2)"
    statement = "G_n(a) <= A_n(a)"
    direction = Direction.LEQ
    validity_text = "a in P^n (equal weights)"
    equality_text = "a is constant"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a = unit(pt.tuples[0], ctx)
        return geometric_mean(a, ctx), arithmetic_mean(a, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._shape_ok(params, pt)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point(tuples=(weighted_tuple(rng, ctx, params["n"], weighted=False),))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        a = constant_tuple(rng, ctx, params["n"], weighted=False)
        return Point(tuples=(bump_first(a, eps, ctx),))


@catalog_entry()
class Prod1Sum(_EqualWeightTuple):
    name = "PROD1_SUM"
    reference = "I_n (Sec 3.1)"
    statement = "n <= sum(a_i) when prod(a_i) = 1"
    direction = Direction.LEQ
    validity_text = "a in P^n with prod(a_i) = 1"
    equality_text = "a is constant (every a_i = 1)"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        return ctx.mp.mpf(params["n"]), ctx.mp.fsum(pt.tuples[0].values)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        if not self._shape_ok(params, pt):
            return False
        log_product = ctx.mp.fsum(log_scalar(v, ctx) for v in pt.tuples[0].values)
        return ctx.approx_equal(exp_scalar(log_product, ctx), 1)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        raw = weighted_tuple(rng, ctx, params["n"], weighted=False)
        g = geometric_mean(raw, ctx)
        return Point(tuples=(raw.with_values([v / g for v in raw.values]),))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        mp = ctx.mp
        values = [mp.mpf(1) for _ in range(params["n"])]
        values[0] = 1 + mp.mpf(eps)
        values[1] = 1 / values[0]
        return Point(tuples=(WeightedTuple(tuple(values), tuple(mp.mpf(1) for _ in values)),))


@catalog_entry()
class Sum1Prod(_EqualWeightTuple):
    name = "SUM1_PROD"
    reference = "J_n (Sec 3.1)"
    statement = "prod(a_i) <= (1/n)^n when sum(a_i) = 1"
    direction = Direction.LEQ
    validity_text = "a in P^n with sum(a_i) = 1"
    equality_text = "a is constant (every a_i = 1/n)"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        mp = ctx.mp
        n = params["n"]
        log_product = mp.fsum(log_scalar(v, ctx) for v in pt.tuples[0].values)
        return exp_scalar(log_product, ctx), int_pow(1 / mp.mpf(n), n, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._shape_ok(params, pt) and ctx.approx_equal(ctx.mp.fsum(pt.tuples[0].values), 1)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        raw = weighted_tuple(rng, ctx, params["n"], weighted=False)
        total = ctx.mp.fsum(raw.values)
        return Point(tuples=(raw.with_values([v / total for v in raw.values]),))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        mp = ctx.mp
        n = params["n"]
        share = 1 / mp.mpf(n)
        values = [share for _ in range(n)]
        values[0] = share * (1 + mp.mpf(eps))
        values[1] = share * (1 - mp.mpf(eps))
        return Point(tuples=(WeightedTuple(tuple(values), tuple(mp.mpf(1) for _ in values)),))


@catalog_entry()
class GA2W(InequalityEntry):
    name = "GA2W"
    reference = "Eq 3(3)/(4)"
    statement = "x^(1-alpha) * y^alpha <= (1-alpha)*x + alpha*y"
    direction = Direction.LEQ
    scalar_names = ("x", "y", "alpha")
    validity_text = "x > 0, y > 0, 0 < alpha < 1"
    equality_text = "x = y"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, y, alpha = pt.scalars
        return pow_scalar(x, 1 - alpha, ctx) * pow_scalar(y, alpha, ctx), (1 - alpha) * x + alpha * y

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y, alpha = pt.scalars
        return x > 0 and y > 0 and 0 < alpha < 1

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y, _ = pt.scalars
        return ctx.approx_equal(x, y)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point((log_uniform(rng, ctx), log_uniform(rng, ctx), uniform(rng, ctx, 1e-9, 1 - 1e-9)))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        x = log_uniform(rng, ctx)
        return Point((x, bump(x, eps, ctx), uniform(rng, ctx, 0.05, 0.95)))


@catalog_entry()
class Young(InequalityEntry):
    name = "YOUNG"
    reference = "Eq 3(5)"
    statement = "x*y <= x^p/p + y^q/q, 1/p + 1/q = 1"
    direction = Direction.LEQ
    scalar_names = ("x", "y", "p")
    validity_text = "x > 0, y > 0, p > 1 (q = p/(p-1))"
    equality_text = "x^p = y^q"

    @staticmethod
    def conjugate(p: Scalar) -> Scalar:
        return p / (p - 1)

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, y, p = pt.scalars
        q = self.conjugate(p)
        return x * y, pow_scalar(x, p, ctx) / p + pow_scalar(y, q, ctx) / q

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y, p = pt.scalars
        return x > 0 and y > 0 and p > 1

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y, p = pt.scalars
        return ctx.approx_equal(pow_scalar(x, p, ctx), pow_scalar(y, self.conjugate(p), ctx))

    def _exponent(self, rng: np.random.Generator, ctx: PrecisionContext) -> Scalar:
        return 1 + log_uniform(rng, ctx, 0.05, 10.0)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point((log_uniform(rng, ctx), log_uniform(rng, ctx), self._exponent(rng, ctx)))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        x = log_uniform(rng, ctx, 1e-2, 1e2)
        p = self._exponent(rng, ctx)
        # x^p = y^q  <=>  y = x^(p-1)
        y = pow_scalar(x, p - 1, ctx)
        return Point((x, bump(y, eps, ctx), p))


class _WeightedTupleEntry(InequalityEntry):
    tuple_names = ("a",)
    params = (ParamSpec("n", ParamKind.INTEGER, default=4, constraint="integer >= 2"),)

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        _check_n(self, params)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        (a,) = pt.tuples
        return a.n == params["n"] and all(v > 0 for v in a.values)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point(tuples=(weighted_tuple(rng, ctx, params["n"]),))


@catalog_entry()
class GAN(_WeightedTupleEntry):
    name = "GAN"
    reference = "Eq 3(6)"
    statement = "G_n(a; w) <= A_n(a; w)"
    direction = Direction.LEQ
    validity_text = "a, w in P^n"
    equality_text = "a is constant"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        (a,) = pt.tuples
        return geometric_mean(a, ctx), arithmetic_mean(a, ctx)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return constant(pt.tuples[0].values, ctx)

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        return Point(tuples=(bump_first(constant_tuple(rng, ctx, params["n"]), eps, ctx),))


def _with_last(prefix: WeightedTuple, value: Scalar, weight: Scalar) -> WeightedTuple:
    return WeightedTuple(prefix.values + (value,), prefix.weights + (weight,))


@catalog_entry()
class Rado(_WeightedTupleEntry):
    name = "RADO"
    reference = "Eq 3(7)"
    statement = "W_{n-1}(A_{n-1} - G_{n-1}) <= W_n(A_n - G_n)"
    direction = Direction.LEQ
    validity_text = "a, w in P^n"
    equality_text = "a_n = G_{n-1}(a; w)"
    params = (ParamSpec("n", ParamKind.INTEGER, default=5, constraint="integer >= 2"),)

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        (a,) = pt.tuples
        n = params["n"]
        return rado_gap(a, n - 1, ctx), rado_gap(a, n, ctx)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        (a,) = pt.tuples
        return ctx.approx_equal(a.values[-1], geometric_mean(a.prefix(a.n - 1), ctx))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        prefix = weighted_tuple(rng, ctx, params["n"] - 1)
        last = bump(geometric_mean(prefix, ctx), eps, ctx)
        return Point(tuples=(_with_last(prefix, last, log_uniform(rng, ctx)),))


@catalog_entry()
class Popoviciu(_WeightedTupleEntry):
    name = "POPOVICIU"
    reference = "Eq 3(8)"
    statement = "(A_{n-1}/G_{n-1})^{W_{n-1}} <= (A_n/G_n)^{W_n}"
    direction = Direction.LEQ
    validity_text = "a, w in P^n"
    equality_text = "a_n = A_{n-1}(a; w)"
    params = (
        ParamSpec("n", ParamKind.INTEGER, default=5, constraint="integer >= 2"),
        ParamSpec(
            "convention",
            ParamKind.CHOICE,
            default=PopoviciuConvention.EXPONENT_WK.value,
            constraint="exponent W_k (ExponentWk) or 1/W_k (ExponentInvWk)",
            choices=tuple(c.value for c in PopoviciuConvention),
        ),
    )

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        (a,) = pt.tuples
        n = params["n"]
        convention = PopoviciuConvention(params["convention"])
        return popoviciu_ratio(a, n - 1, convention, ctx), popoviciu_ratio(a, n, convention, ctx)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        (a,) = pt.tuples
        return ctx.approx_equal(a.values[-1], arithmetic_mean(a.prefix(a.n - 1), ctx))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        prefix = weighted_tuple(rng, ctx, params["n"] - 1)
        last = bump(arithmetic_mean(prefix, ctx), eps, ctx)
        return Point(tuples=(_with_last(prefix, last, log_uniform(rng, ctx)),))


class _Midpoint(InequalityEntry):
    scalar_names = ("x", "y")
    equality_text = "x = y"

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y = pt.scalars
        return ctx.approx_equal(x, y)


@catalog_entry()
class LogMidpointConcave(_Midpoint):
    name = "LOG_MIDPOINT_CONCAVE"
    reference = "Thm 3.1.3"
    statement = "(log x + log y)/2 <= log((x + y)/2)"
    direction = Direction.LEQ
    validity_text = "x > 0 and y > 0"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, y = pt.scalars
        return (log_scalar(x, ctx) + log_scalar(y, ctx)) / 2, log_scalar((x + y) / 2, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, y = pt.scalars
        return x > 0 and y > 0

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point((log_uniform(rng, ctx), log_uniform(rng, ctx)))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        x = log_uniform(rng, ctx)
        return Point((x, bump(x, eps, ctx)))


@catalog_entry()
class ExpMidpointConvex(_Midpoint):
    name = "EXP_MIDPOINT_CONVEX"
    reference = "Thm 3.1.3"
    statement = "exp((x + y)/2) <= (exp(x) + exp(y))/2"
    direction = Direction.LEQ
    validity_text = "x, y real"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, y = pt.scalars
        return exp_scalar((x + y) / 2, ctx), (exp_scalar(x, ctx) + exp_scalar(y, ctx)) / 2

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return True

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point((uniform(rng, ctx, -50.0, 50.0), uniform(rng, ctx, -50.0, 50.0)))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        x = uniform(rng, ctx, 0.5, 20.0)
        if rng.random() < 0.5:
            x = -x
        return Point((x, bump(x, eps, ctx)))

