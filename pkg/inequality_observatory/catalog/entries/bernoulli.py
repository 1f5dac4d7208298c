"""Bernoulli's inequality, its equivalent rewritings and its generalizations."""

from __future__ import annotations

from typing import ClassVar, Mapping, Optional, Tuple

import numpy as np

from ...errors import BadParams
from ...means import SignedTuple
from ...numerics import PrecisionContext, Scalar, exp_scalar, int_pow, log_scalar, pow_scalar
from ..entry import InequalityEntry, Params
from ..regions import (
    ABOVE_MINUS_ONE,
    ABOVE_ONE,
    AT_LEAST_ONE,
    BELOW_ONE,
    MINUS_ONE_TO_ZERO,
    NEGATIVE,
    NONNEGATIVE,
    OUTSIDE_UNIT,
    OUTSIDE_UNIT_CLOSED,
    POSITIVE,
    POSITIVE_AROUND_ONE,
    UNIT_CLOSED,
    RegionEntry,
    integers_from,
)
from ..registry import catalog_entry
from ..sampling import above_minus_one, log_uniform, positive_weights, uniform
from ..types import Direction, ParamKind, ParamSpec, Point
from ._shared import constant


def bernoulli_sides(x: Scalar, alpha: Scalar, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
    """((1+x)^alpha, 1 + alpha*x)."""
    return pow_scalar(1 + x, alpha, ctx), 1 + alpha * x


class _Bernoulli(RegionEntry):
    scalar_names = ("x", "alpha")
    statement = "(1+x)^alpha <= 1 + alpha*x"
    equality_text = "x = 0 or alpha in {0, 1}"
    complement_equality_text: ClassVar[Optional[str]] = "x = 0"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, alpha = pt.scalars
        return bernoulli_sides(x, alpha, ctx)


@catalog_entry()
class BernoulliB1(_Bernoulli):
    name = "BERNOULLI_B1"
    reference = "Eq 4(1) B1"
    direction = Direction.LEQ
    validity_text = "x >= 0, 0 <= alpha <= 1"
    complement_validity_text = "x >= 0, alpha < 0 or alpha > 1"
    regions = {"x": NONNEGATIVE, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT}


@catalog_entry()
class BernoulliB2(_Bernoulli):
    name = "BERNOULLI_B2"
    reference = "Eq 4(1) B2"
    direction = Direction.LEQ
    validity_text = "-1 < x <= 0, 0 <= alpha <= 1"
    complement_validity_text = "-1 < x <= 0, alpha < 0 or alpha > 1"
    regions = {"x": MINUS_ONE_TO_ZERO, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT}


@catalog_entry()
class BernoulliB3(_Bernoulli):
    name = "BERNOULLI_B3"
    reference = "Eq 4(1) B3"
    direction = Direction.LEQ
    validity_text = "x > -1, 0 <= alpha <= 1"
    regions = {"x": ABOVE_MINUS_ONE, "alpha": UNIT_CLOSED}
    complement_equality_text = None


@catalog_entry()
class BernoulliB4(_Bernoulli):
    name = "BERNOULLI_B4"
    reference = "Eq 4(2) B4"
    statement = "(1+x)^alpha >= 1 + alpha*x"
    direction = Direction.GEQ
    validity_text = "x > -1, alpha > 1"
    equality_text = "x = 0"
    complement_validity_text = "x > -1, 0 <= alpha <= 1"
    complement_equality_text = "x = 0 or alpha in {0, 1}"
    regions = {"x": ABOVE_MINUS_ONE, "alpha": ABOVE_ONE}
    complement_regions = {"alpha": UNIT_CLOSED}


@catalog_entry()
class BernoulliB5(_Bernoulli):
    name = "BERNOULLI_B5"
    reference = "Eq 4(2) B5"
    statement = "(1+x)^alpha >= 1 + alpha*x"
    direction = Direction.GEQ
    validity_text = "x > -1, alpha < 0"
    equality_text = "x = 0"
    complement_validity_text = "x > -1, 0 <= alpha <= 1"
    complement_equality_text = "x = 0 or alpha in {0, 1}"
    regions = {"x": ABOVE_MINUS_ONE, "alpha": NEGATIVE}
    complement_regions = {"alpha": UNIT_CLOSED}


@catalog_entry()
class BernoulliFull(_Bernoulli):
    name = "BERNOULLI_FULL"
    reference = "Eq 4(1)/(~1)"
    direction = Direction.LEQ
    validity_text = "x > -1, 0 <= alpha <= 1"
    complement_validity_text = "x > -1, alpha < 0 or alpha > 1"
    regions = {"x": ABOVE_MINUS_ONE, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT}


@catalog_entry()
class BernoulliFullAlt(_Bernoulli):
    name = "BERNOULLI_FULL_ALT"
    reference = "Eq 4(2)/(~2)"
    statement = "(1+x)^(1-alpha) <= 1 + (1-alpha)*x"
    direction = Direction.LEQ
    validity_text = "x > -1, 0 <= alpha <= 1"
    complement_validity_text = "x > -1, alpha < 0 or alpha > 1"
    regions = {"x": ABOVE_MINUS_ONE, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT}

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, alpha = pt.scalars
        return bernoulli_sides(x, 1 - alpha, ctx)


@catalog_entry()
class OriginalBernoulli(RegionEntry):
    name = "ORIGINAL_BERNOULLI"
    reference = "Sec 4.1.5"
    statement = "(1+x)^n >= 1 + n*x"
    direction = Direction.GEQ
    scalar_names = ("x", "n")
    validity_text = "x >= 0, n integer >= 2"
    equality_text = "x = 0"
    regions = {"x": NONNEGATIVE, "n": integers_from(2)}

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, n = pt.scalars
        return int_pow(1 + x, int(n), ctx), 1 + n * x


def _difference_quotient(y: Scalar, k: Scalar, ctx: PrecisionContext) -> Scalar:
    return (int_pow(y, int(k), ctx) - 1) / k


@catalog_entry()
class BarrowLemma(RegionEntry):
    name = "BARROW_LEMMA"
    reference = "Eq 4(3)"
    statement = "(y^(n+1) - 1)/(n+1) >= (y^n - 1)/n"
    direction = Direction.GEQ
    scalar_names = ("y", "n")
    validity_text = "y > 0, n integer >= 1"
    equality_text = "y = 1"
    regions = {"y": POSITIVE_AROUND_ONE, "n": integers_from(1)}

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        y, n = pt.scalars
        return _difference_quotient(y, n + 1, ctx), _difference_quotient(y, n, ctx)


@catalog_entry()
class BarrowLemmaPQ(RegionEntry):
    name = "BARROW_LEMMA_PQ"
    reference = "Eq 4(3) corollary"
    statement = "(y^p - 1)/p >= (y^q - 1)/q"
    direction = Direction.GEQ
    scalar_names = ("y", "p", "q")
    validity_text = "y > 0, p > q >= 1 integers"
    equality_text = "y = 1"
    regions = {"y": POSITIVE_AROUND_ONE, "p": integers_from(2), "q": integers_from(1)}

    def extra_validity(self, values: Mapping[str, Scalar], ctx: PrecisionContext) -> bool:
        return values["p"] > values["q"]

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        y, p, q = pt.scalars
        return _difference_quotient(y, p, ctx), _difference_quotient(y, q, ctx)


@catalog_entry()
class NegReflect(RegionEntry):
    name = "NEG_REFLECT"
    reference = "Ex 4.2.1.1 Eq (5)"
    statement = "(1-x)^alpha <= 1 - alpha*x"
    direction = Direction.LEQ
    scalar_names = ("x", "alpha")
    validity_text = "x < 1, 0 <= alpha <= 1"
    equality_text = "x = 0 or alpha in {0, 1}"
    complement_validity_text = "x < 1, alpha <= 0 or alpha >= 1"
    complement_equality_text = "x = 0 or alpha in {0, 1}"
    regions = {"x": BELOW_ONE, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT_CLOSED}

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, alpha = pt.scalars
        return bernoulli_sides(-x, alpha, ctx)


@catalog_entry()
class PowerSecant(RegionEntry):
    name = "POWER_SECANT"
    reference = "Ex 4.2.1.2 Eq (6)"
    statement = "x^alpha <= (1-alpha) + alpha*x"
    direction = Direction.LEQ
    scalar_names = ("x", "alpha")
    validity_text = "x > 0, 0 <= alpha <= 1"
    equality_text = "x = 1 or alpha in {0, 1}"
    complement_validity_text = "x > 0, alpha < 0 or alpha > 1"
    complement_equality_text = "x = 1"
    regions = {"x": POSITIVE_AROUND_ONE, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT}

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, alpha = pt.scalars
        return pow_scalar(x, alpha, ctx), (1 - alpha) + alpha * x


@catalog_entry()
class GA2Complete(RegionEntry):
    name = "GA2_COMPLETE"
    reference = "Sec 4.2.2.2"
    statement = "x^(1-alpha) * y^alpha <= (1-alpha)*x + alpha*y"
    direction = Direction.LEQ
    scalar_names = ("x", "y", "alpha")
    validity_text = "x > 0, y > 0, 0 <= alpha <= 1"
    equality_text = "x = y or alpha in {0, 1}"
    complement_validity_text = "x > 0, y > 0, alpha < 0 or alpha > 1"
    complement_equality_text = "x = y"
    regions = {"x": POSITIVE, "y": POSITIVE, "alpha": UNIT_CLOSED}
    complement_regions = {"alpha": OUTSIDE_UNIT}
    relations = (("x", "y"),)

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, y, alpha = pt.scalars
        return pow_scalar(x, 1 - alpha, ctx) * pow_scalar(y, alpha, ctx), (1 - alpha) * x + alpha * y


class _TwoPoint(RegionEntry):
    scalar_names = ("a", "b", "alpha")
    regions = {"a": POSITIVE, "b": POSITIVE, "alpha": UNIT_CLOSED}
    relations = (("a", "b"),)
    equality_text = "a = b or alpha in {0, 1}"
    complement_validity_text = "a > 0, b > 0, alpha < 0 or alpha > 1"
    complement_equality_text = "a = b"
    complement_regions = {"alpha": OUTSIDE_UNIT}
    validity_text = "a > 0, b > 0, 0 <= alpha <= 1"


@catalog_entry()
class Ruthing(_TwoPoint):
    name = "RUTHING"
    reference = "Sec 4.2.2.3 Eq (7)"
    statement = "alpha*a^(alpha-1)*(a-b) <= a^alpha - b^alpha"
    direction = Direction.LEQ

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b, alpha = pt.scalars
        return alpha * pow_scalar(a, alpha - 1, ctx) * (a - b), pow_scalar(a, alpha, ctx) - pow_scalar(b, alpha, ctx)


@catalog_entry()
class RuthingUpper(_TwoPoint):
    name = "RUTHING_UPPER"
    reference = "Sec 4.2.2.3 Eq (7)"
    statement = "a^alpha - b^alpha <= alpha*b^(alpha-1)*(a-b)"
    direction = Direction.LEQ

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b, alpha = pt.scalars
        return pow_scalar(a, alpha, ctx) - pow_scalar(b, alpha, ctx), alpha * pow_scalar(b, alpha - 1, ctx) * (a - b)


@catalog_entry()
class Jacobsthal(RegionEntry):
    name = "JACOBSTHAL"
    reference = "Sec 4.2.2.4"
    statement = "(alpha-1)*a^alpha + b^alpha >= alpha*a^(alpha-1)*b"
    direction = Direction.GEQ
    scalar_names = ("a", "b", "alpha")
    validity_text = "a > 0, b > 0, alpha <= 0 or alpha >= 1"
    equality_text = "a = b or alpha in {0, 1}"
    complement_validity_text = "a > 0, b > 0, 0 <= alpha <= 1"
    complement_equality_text = "a = b or alpha in {0, 1}"
    regions = {"a": POSITIVE, "b": POSITIVE, "alpha": OUTSIDE_UNIT_CLOSED}
    complement_regions = {"alpha": UNIT_CLOSED}
    relations = (("a", "b"),)

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b, alpha = pt.scalars
        lhs = (alpha - 1) * pow_scalar(a, alpha, ctx) + pow_scalar(b, alpha, ctx)
        return lhs, alpha * pow_scalar(a, alpha - 1, ctx) * b


@catalog_entry()
class JacobsthalPrinted(RegionEntry):
    """The coefficient-alpha display; strict everywhere on its domain, so E is empty."""

    name = "JACOBSTHAL_PRINTED"
    reference = "Sec 4.2.2.4 (as printed)"
    statement = "alpha*a^alpha + b^alpha >= alpha*a^(alpha-1)*b"
    direction = Direction.GEQ
    scalar_names = ("a", "b", "alpha")
    validity_text = "a > 0, b > 0, alpha >= 1"
    equality_text = "empty"
    regions = {"a": POSITIVE, "b": POSITIVE, "alpha": AT_LEAST_ONE}

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b, alpha = pt.scalars
        lhs = alpha * pow_scalar(a, alpha, ctx) + pow_scalar(b, alpha, ctx)
        return lhs, alpha * pow_scalar(a, alpha - 1, ctx) * b


def bush_value(x: Scalar, p: Scalar, ctx: PrecisionContext) -> Scalar:
    """(1 + x/p)^p."""
    return pow_scalar(1 + x / p, p, ctx)


@catalog_entry()
class Bush(InequalityEntry):
    """Monotonicity of (1 + x/t)^t on each half-line of t.

    Both exponents share a sign on V; on the complement they straddle zero and
    the inequality reverses.
    """

    name = "BUSH"
    reference = "Sec 4.2.2.6 Eq (8)"
    statement = "(1 + x/p)^p <= (1 + x/q)^q"
    direction = Direction.LEQ
    scalar_names = ("x", "p", "q")
    validity_text = "p, q nonzero with the same sign, p <= q, 1 + x/p > 0, 1 + x/q > 0"
    equality_text = "x = 0 or p = q"
    complement_validity_text = "p < 0 < q, 1 + x/p > 0, 1 + x/q > 0"
    complement_equality_text = "x = 0"

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        x, p, q = pt.scalars
        return bush_value(x, p, ctx), bush_value(x, q, ctx)

    @staticmethod
    def _defined(x: Scalar, p: Scalar, q: Scalar) -> bool:
        return p != 0 and q != 0 and 1 + x / p > 0 and 1 + x / q > 0

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, p, q = pt.scalars
        return self._defined(x, p, q) and (p > 0) == (q > 0) and p <= q

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, p, q = pt.scalars
        return ctx.approx_equal(x, 0) or ctx.approx_equal(p, q)

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        x, p, q = pt.scalars
        return self._defined(x, p, q) and p < 0 < q

    def in_complement_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return ctx.approx_equal(pt.scalars[0], 0)

    def _exponent_pair(
        self, x: Scalar, rng: np.random.Generator, ctx: PrecisionContext, spread: float
    ) -> Tuple[Scalar, Scalar]:
        if rng.random() < 0.5:
            p = max(ctx.mp.mpf(0), -x) + log_uniform(rng, ctx, 1e-2, 10.0)
            return p, p + log_uniform(rng, ctx, spread, 10.0)
        q = min(ctx.mp.mpf(0), -x) - log_uniform(rng, ctx, 1e-2, 10.0)
        return q - log_uniform(rng, ctx, spread, 10.0), q

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        x = uniform(rng, ctx, -5.0, 5.0)
        p, q = self._exponent_pair(x, rng, ctx, 1e-3)
        return Point((x, p, q))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        mp = ctx.mp
        eps_ = mp.mpf(eps)
        if rng.random() < 0.5:
            x = uniform(rng, ctx, 0.1, 5.0) * (1 if rng.random() < 0.5 else -1)
            p, _ = self._exponent_pair(x, rng, ctx, 1e-1)
            if p > 0:
                return Point((x, p, p * (1 + eps_)))
            high = min(mp.mpf(0), -x)
            return Point((x, p, p + eps_ * (high - p) / 2))
        p, q = self._exponent_pair(mp.mpf(0), rng, ctx, 1e-1)
        bound = min(mp.fabs(p), mp.fabs(q)) / 2
        return Point((eps_ * bound * (1 if rng.random() < 0.5 else -1), p, q))

    def _straddling(self, rng: np.random.Generator, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        return -log_uniform(rng, ctx, 0.1, 10.0), log_uniform(rng, ctx, 0.1, 10.0)

    def sample_complement(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        p, q = self._straddling(rng, ctx)
        # -q < x < -p keeps both bases positive
        x = -q + (q - p) * uniform(rng, ctx, 1e-3, 1 - 1e-3)
        return Point((x, p, q))

    def near_complement_equality(
        self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext
    ) -> Point:
        p, q = self._straddling(rng, ctx)
        bound = min(-p, q) / 2
        return Point((ctx.mp.mpf(eps) * bound * (1 if rng.random() < 0.5 else -1), p, q))


@catalog_entry()
class Pecaric(InequalityEntry):
    name = "PECARIC"
    reference = "Sec 4.2.3 Eq (10)"
    statement = "prod (1+a_i)^(w_i) <= 1 + sum w_i*a_i"
    direction = Direction.LEQ
    tuple_names = ("a",)
    signed_tuples = True
    params = (ParamSpec("n", ParamKind.INTEGER, default=3, constraint="integer >= 1"),)
    validity_text = "a_i > -1, w_i > 0, W_n <= 1"
    equality_text = "(W_n = 1 and a constant) or a = 0"

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        if params["n"] < 1:
            raise BadParams(f"PECARIC: n must be >= 1, got {params['n']}.")

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        (a,) = pt.tuples
        mp = ctx.mp
        log_lhs = mp.fsum(w * log_scalar(1 + v, ctx) for v, w in zip(a.values, a.weights))
        return exp_scalar(log_lhs, ctx), 1 + mp.fdot(a.weights, a.values)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        (a,) = pt.tuples
        if a.n != params["n"] or any(not v > -1 for v in a.values):
            return False
        total = a.total_weight(ctx)
        return total <= 1 or ctx.approx_equal(total, 1)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        (a,) = pt.tuples
        if all(ctx.approx_equal(v, 0) for v in a.values):
            return True
        return ctx.approx_equal(a.total_weight(ctx), 1) and constant(a.values, ctx)

    @staticmethod
    def _weights(rng: np.random.Generator, ctx: PrecisionContext, n: int, total: Scalar) -> Tuple[Scalar, ...]:
        raw = positive_weights(rng, ctx, n)
        raw_total = ctx.mp.fsum(raw)
        return tuple(w * total / raw_total for w in raw)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        n = params["n"]
        mp = ctx.mp
        total = mp.mpf(1) if rng.random() < 0.25 else uniform(rng, ctx, 0.05, 1.0)
        values = tuple(above_minus_one(rng, ctx) for _ in range(n))
        return Point(tuples=(SignedTuple(values, self._weights(rng, ctx, n, total)),))

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        n = params["n"]
        mp = ctx.mp
        eps_ = mp.mpf(eps)
        if rng.random() < 0.5:
            c = -uniform(rng, ctx, 0.05, 0.9) if rng.random() < 0.5 else log_uniform(rng, ctx, 0.05, 10.0)
            values = [c] * n
            values[0] = c * (1 + eps_)
            weights = self._weights(rng, ctx, n, mp.mpf(1))
        else:
            values = [mp.mpf(0)] * n
            values[0] = eps_
            weights = self._weights(rng, ctx, n, uniform(rng, ctx, 0.05, 0.95))
        return Point(tuples=(SignedTuple(tuple(values), weights),))
