"""Hölder, Minkowski, Radon and Liapunov inequalities, plain and weighted."""

from __future__ import annotations

from typing import ClassVar, Optional, Sequence, Tuple

import numpy as np

from ...errors import BadParams
from ...means import WeightedTuple, conjugate_index
from ...numerics import PrecisionContext, Scalar, pow_scalar
from ..entry import InequalityEntry, Params
from ..registry import catalog_entry
from ..sampling import bump_first, constant_tuple, log_uniform, weighted_tuple
from ..types import Direction, ParamKind, ParamSpec, Point
from ._shared import constant, proportional, same_weights, unit

N_PARAM = ParamSpec("n", ParamKind.INTEGER, default=3, constraint="integer >= 2")


def weighted_sum(t: WeightedTuple, values: Sequence[Scalar], ctx: PrecisionContext) -> Scalar:
    return ctx.mp.fdot(t.weights, values)


def power_norm(t: WeightedTuple, p: Scalar, ctx: PrecisionContext) -> Scalar:
    """(sum w_i a_i^p)^(1/p)."""
    total = weighted_sum(t, [pow_scalar(v, p, ctx) for v in t.values], ctx)
    return pow_scalar(total, 1 / p, ctx)


class _PairEntry(InequalityEntry):
    """Two n-tuples a, b; weighted variants require both to carry the same weights."""

    tuple_names = ("a", "b")
    weighted: ClassVar[bool] = False
    exponent_name: ClassVar[str] = "p"

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        if params["n"] < 2:
            raise BadParams(f"{self.name}: n must be >= 2, got {params['n']}.")

    def exponent(self, params: Params) -> Scalar:
        return params[self.exponent_name]

    def _pair(self, pt: Point, ctx: PrecisionContext) -> Tuple[WeightedTuple, WeightedTuple]:
        a, b = pt.tuples
        if not self.weighted:
            return unit(a, ctx), unit(b, ctx)
        return a, b

    def _shape_ok(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        a, b = pt.tuples
        if a.n != params["n"] or b.n != params["n"]:
            return False
        return not self.weighted or same_weights(a, b, ctx)

    def _draw_pair(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Tuple[WeightedTuple, WeightedTuple]:
        a = weighted_tuple(rng, ctx, params["n"], weighted=self.weighted)
        b = weighted_tuple(rng, ctx, params["n"], weighted=False)
        return a, WeightedTuple(b.values, a.weights)

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point(tuples=self._draw_pair(params, rng, ctx))

    def partner(self, a: WeightedTuple, params: Params, ctx: PrecisionContext) -> WeightedTuple:
        """A b making (a, b) an equality point."""
        return a

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        a, _ = self._draw_pair(params, rng, ctx)
        c = log_uniform(rng, ctx, 0.1, 10.0)
        b = self.partner(a, params, ctx)
        b = b.with_values([c * v for v in b.values])
        return Point(tuples=(a, bump_first(b, eps, ctx)))

    # Complement hooks share the formula, equality set and samplers; only the exponent range differs.

    def in_complement_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self.in_equality(params, pt, ctx)

    def sample_complement(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return self.sample(params, rng, ctx)

    def near_complement_equality(
        self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext
    ) -> Optional[Point]:
        return self.near_equality(params, rng, eps, ctx)


class _HolderBase(_PairEntry):
    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        super().check_params(params, ctx)
        p = self.exponent(params)
        if p == 0 or p == 1:
            raise BadParams(f"{self.name}: p must differ from 0 and 1, got {p}.")

    def partner(self, a: WeightedTuple, params: Params, ctx: PrecisionContext) -> WeightedTuple:
        p = self.exponent(params)
        return a.with_values([pow_scalar(v, p - 1, ctx) for v in a.values])

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        a, b = pt.tuples
        p = self.exponent(params)
        q = conjugate_index(p, ctx)
        return proportional(
            [pow_scalar(v, p, ctx) for v in a.values],
            [pow_scalar(v, q, ctx) for v in b.values],
            ctx,
        )


@catalog_entry()
class Holder(_HolderBase):
    name = "HOLDER"
    reference = "Eq 6(1)"
    statement = "sum a_i*b_i <= (sum a_i^p)^(1/p) * (sum b_i^p')^(1/p')"
    direction = Direction.LEQ
    params = (N_PARAM, ParamSpec("p", ParamKind.SCALAR, default=2, constraint="p > 1 (p < 1, p != 0 on the complement)"))
    validity_text = "a, b in P^n, p > 1"
    equality_text = "a^p and b^p' proportional"
    complement_validity_text = "a, b in P^n, p < 1, p != 0"
    complement_equality_text = "a^p and b^p' proportional"
    default_plans = ({"p": (1.2, 6.0)},)
    complement_plans = ({"p": (0.2, 0.8)}, {"p": (-4.0, -0.2)})

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b = self._pair(pt, ctx)
        p = self.exponent(params)
        q = conjugate_index(p, ctx)
        inner = weighted_sum(a, [x * y for x, y in zip(a.values, b.values)], ctx)
        return inner, power_norm(a, p, ctx) * power_norm(b, q, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self.exponent(params) > 1 and self._shape_ok(params, pt, ctx)

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self.exponent(params) < 1 and self._shape_ok(params, pt, ctx)


@catalog_entry()
class HolderW(Holder):
    name = "HOLDER_W"
    reference = "Eq 6(1w)"
    statement = "sum w_i*a_i*b_i <= (sum w_i*a_i^p)^(1/p) * (sum w_i*b_i^p')^(1/p')"
    weighted = True
    validity_text = "a, b in P^n sharing weights w, p > 1"
    complement_validity_text = "a, b in P^n sharing weights w, p < 1, p != 0"


@catalog_entry()
class Cauchy(Holder):
    name = "CAUCHY"
    reference = "Eq 6(1), p = 2"
    statement = "sum a_i*b_i <= sqrt(sum a_i^2) * sqrt(sum b_i^2)"
    params = (N_PARAM,)
    validity_text = "a, b in P^n"
    equality_text = "a and b proportional"
    complement_validity_text = None
    complement_equality_text = None
    default_plans = ({},)
    complement_plans = ()

    def exponent(self, params: Params) -> Scalar:
        return 2


@catalog_entry()
class HolderExt(_HolderBase):
    name = "HOLDER_EXT"
    reference = "Eq 6(3)"
    statement = "(sum a_i*b_i)^(p*p') <= (sum a_i^p)^p' * (sum b_i^p')^p"
    direction = Direction.LEQ
    params = (N_PARAM, ParamSpec("p", ParamKind.SCALAR, default=2, constraint="p != 0, p != 1"))
    validity_text = "a, b in P^n, p real, p not in {0, 1}"
    equality_text = "a^p and b^p' proportional"
    default_plans = ({"p": (1.2, 6.0)}, {"p": (0.2, 0.8)}, {"p": (-4.0, -0.2)})

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b = self._pair(pt, ctx)
        p = self.exponent(params)
        q = conjugate_index(p, ctx)
        inner = weighted_sum(a, [x * y for x, y in zip(a.values, b.values)], ctx)
        a_sum = weighted_sum(a, [pow_scalar(v, p, ctx) for v in a.values], ctx)
        b_sum = weighted_sum(b, [pow_scalar(v, q, ctx) for v in b.values], ctx)
        return pow_scalar(inner, p * q, ctx), pow_scalar(a_sum, q, ctx) * pow_scalar(b_sum, p, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self._shape_ok(params, pt, ctx)


@catalog_entry()
class HolderExtW(HolderExt):
    name = "HOLDER_EXT_W"
    reference = "Eq 6(3w)"
    statement = "(sum w_i*a_i*b_i)^(p*p') <= (sum w_i*a_i^p)^p' * (sum w_i*b_i^p')^p"
    weighted = True
    validity_text = "a, b in P^n sharing weights w, p not in {0, 1}"


class _MinkowskiBase(_PairEntry):
    statement = "(sum (a_i+b_i)^p)^(1/p) <= (sum a_i^p)^(1/p) + (sum b_i^p)^(1/p)"
    direction = Direction.LEQ
    equality_text = "p = 1 or a, b proportional"

    def partner(self, a: WeightedTuple, params: Params, ctx: PrecisionContext) -> WeightedTuple:
        return a

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b = self._pair(pt, ctx)
        p = self.exponent(params)
        both = a.with_values([x + y for x, y in zip(a.values, b.values)])
        return power_norm(both, p, ctx), power_norm(a, p, ctx) + power_norm(b, p, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self.exponent(params) >= 1 and self._shape_ok(params, pt, ctx)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        if ctx.approx_equal(self.exponent(params), 1):
            return True
        a, b = pt.tuples
        return proportional(a.values, b.values, ctx)


@catalog_entry()
class Minkowski(_MinkowskiBase):
    name = "MINKOWSKI"
    reference = "Eq 6(2)"
    params = (N_PARAM, ParamSpec("p", ParamKind.SCALAR, default=2, constraint="p >= 1"))
    validity_text = "a, b in P^n, p >= 1"
    default_plans = ({"p": (1.0, 6.0)}, {"p": 1})

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        super().check_params(params, ctx)
        if not self.exponent(params) >= 1:
            raise BadParams(f"{self.name}: p must be >= 1, got {self.exponent(params)}.")


@catalog_entry()
class MinkowskiW(Minkowski):
    name = "MINKOWSKI_W"
    reference = "Eq 6(2w)"
    statement = "(sum w_i*(a_i+b_i)^p)^(1/p) <= (sum w_i*a_i^p)^(1/p) + (sum w_i*b_i^p)^(1/p)"
    weighted = True
    validity_text = "a, b in P^n sharing weights w, p >= 1"


@catalog_entry()
class Triangle(Minkowski):
    name = "TRIANGLE"
    reference = "Eq 6(2), p = 2"
    statement = "sqrt(sum (a_i+b_i)^2) <= sqrt(sum a_i^2) + sqrt(sum b_i^2)"
    params = (N_PARAM,)
    validity_text = "a, b in P^n"
    equality_text = "a, b proportional"
    default_plans = ({},)

    def exponent(self, params: Params) -> Scalar:
        return 2


@catalog_entry()
class MinkowskiExt(_MinkowskiBase):
    name = "MINKOWSKI_EXT"
    reference = "Eq 6(2)/(~2)"
    params = (N_PARAM, ParamSpec("p", ParamKind.SCALAR, default=2, constraint="p != 0"))
    validity_text = "a, b in P^n, p >= 1"
    complement_validity_text = "a, b in P^n, p <= 1, p != 0"
    complement_equality_text = "p = 1 or a, b proportional"
    default_plans = ({"p": (1.0, 6.0)},)
    complement_plans = ({"p": (0.1, 0.9)}, {"p": (-4.0, -0.2)})

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        super().check_params(params, ctx)
        if self.exponent(params) == 0:
            raise BadParams(f"{self.name}: p must be nonzero.")

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return self.exponent(params) <= 1 and self._shape_ok(params, pt, ctx)


@catalog_entry()
class MinkowskiExtW(MinkowskiExt):
    name = "MINKOWSKI_EXT_W"
    reference = "Eq 6(2w)/(~2w)"
    statement = "(sum w_i*(a_i+b_i)^p)^(1/p) <= (sum w_i*a_i^p)^(1/p) + (sum w_i*b_i^p)^(1/p)"
    weighted = True
    validity_text = "a, b in P^n sharing weights w, p >= 1"
    complement_validity_text = "a, b in P^n sharing weights w, p <= 1, p != 0"


@catalog_entry()
class Radon(_PairEntry):
    name = "RADON"
    reference = "Eq 6(4)"
    statement = "sum a_i^s * b_i^(1-s) <= (sum a_i)^s * (sum b_i)^(1-s)"
    direction = Direction.LEQ
    exponent_name = "s"
    params = (N_PARAM, ParamSpec("s", ParamKind.SCALAR, default=0.5, constraint="0 < s < 1 (s < 0 or s > 1 on the complement)"))
    validity_text = "a, b in P^n, 0 < s < 1"
    equality_text = "a, b proportional"
    complement_validity_text = "a, b in P^n, s < 0 or s > 1"
    complement_equality_text = "a, b proportional"
    default_plans = ({"s": (0.05, 0.95)},)
    complement_plans = ({"s": (-3.0, -0.1)}, {"s": (1.1, 4.0)})

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        super().check_params(params, ctx)
        s = self.exponent(params)
        if s == 0 or s == 1:
            raise BadParams(f"RADON: s must differ from 0 and 1, got {s}.")

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        a, b = pt.tuples
        s = self.exponent(params)
        mp = ctx.mp
        lhs = mp.fsum(pow_scalar(x, s, ctx) * pow_scalar(y, 1 - s, ctx) for x, y in zip(a.values, b.values))
        return lhs, pow_scalar(mp.fsum(a.values), s, ctx) * pow_scalar(mp.fsum(b.values), 1 - s, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return 0 < self.exponent(params) < 1 and self._shape_ok(params, pt, ctx)

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        s = self.exponent(params)
        return (s < 0 or s > 1) and self._shape_ok(params, pt, ctx)

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        a, b = pt.tuples
        return proportional(a.values, b.values, ctx)


def liapunov_ordered(r: Scalar, s: Scalar, t: Scalar) -> bool:
    """Orderings on which the log-convexity form holds as <=."""
    return t < s < r or r < t < s or s < r < t


@catalog_entry()
class Liapunov(InequalityEntry):
    name = "LIAPUNOV"
    reference = "Eq 6(5)"
    statement = "(sum w_i*x_i^s)^(r-t) <= (sum w_i*x_i^t)^(r-s) * (sum w_i*x_i^r)^(s-t)"
    direction = Direction.LEQ
    tuple_names = ("x",)
    params = (
        N_PARAM,
        ParamSpec("r", ParamKind.SCALAR, default=3, constraint="r, s, t pairwise distinct"),
        ParamSpec("s", ParamKind.SCALAR, default=2, constraint="r, s, t pairwise distinct"),
        ParamSpec("t", ParamKind.SCALAR, default=1, constraint="r, s, t pairwise distinct"),
    )
    validity_text = "x, w in P^n, t < s < r or r < t < s or s < r < t"
    equality_text = "x is constant"
    complement_validity_text = "x, w in P^n, t < r < s or s < t < r or r < s < t"
    complement_equality_text = "x is constant"
    default_plans = ({"t": (-3.0, -1.0), "s": (-0.5, 0.5), "r": (1.0, 3.0)},)
    complement_plans = ({"t": (-3.0, -1.0), "r": (-0.5, 0.5), "s": (1.0, 3.0)},)

    def check_params(self, params: Params, ctx: PrecisionContext) -> None:
        if params["n"] < 2:
            raise BadParams(f"LIAPUNOV: n must be >= 2, got {params['n']}.")
        r, s, t = params["r"], params["s"], params["t"]
        if r == s or r == t or s == t:
            raise BadParams(f"LIAPUNOV: r, s, t must be pairwise distinct, got r={r}, s={s}, t={t}.")

    def formula(self, params: Params, pt: Point, ctx: PrecisionContext) -> Tuple[Scalar, Scalar]:
        (x,) = pt.tuples
        r, s, t = params["r"], params["s"], params["t"]

        def moment(k: Scalar) -> Scalar:
            return weighted_sum(x, [pow_scalar(v, k, ctx) for v in x.values], ctx)

        lhs = pow_scalar(moment(s), r - t, ctx)
        return lhs, pow_scalar(moment(t), r - s, ctx) * pow_scalar(moment(r), s - t, ctx)

    def in_validity(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return pt.tuples[0].n == params["n"] and liapunov_ordered(params["r"], params["s"], params["t"])

    def in_complement(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return pt.tuples[0].n == params["n"] and not liapunov_ordered(params["r"], params["s"], params["t"])

    def in_equality(self, params: Params, pt: Point, ctx: PrecisionContext) -> bool:
        return constant(pt.tuples[0].values, ctx)

    in_complement_equality = in_equality

    def sample(self, params: Params, rng: np.random.Generator, ctx: PrecisionContext) -> Point:
        return Point(tuples=(weighted_tuple(rng, ctx, params["n"]),))

    sample_complement = sample

    def near_equality(self, params: Params, rng: np.random.Generator, eps: float, ctx: PrecisionContext) -> Point:
        return Point(tuples=(bump_first(constant_tuple(rng, ctx, params["n"]), eps, ctx),))

    near_complement_equality = near_equality
