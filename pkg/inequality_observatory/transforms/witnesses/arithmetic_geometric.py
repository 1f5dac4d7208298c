"""Witnesses among the arithmetic-geometric mean forms."""

from __future__ import annotations

from typing import List

from ...catalog import Params, Point, lookup
from ...means import WeightedTuple, arithmetic_mean, geometric_mean
from ...numerics import PrecisionContext, Scalar, pow_scalar
from ..constructions import backward_reduce
from ..registry import register_witness
from ..types import Derivation, EquivalenceWitness, WitnessKind


def _unit_tuple(values: List[Scalar], ctx: PrecisionContext) -> WeightedTuple:
    return WeightedTuple(tuple(values), tuple(ctx.mp.mpf(1) for _ in values))


def _scaled(pt: Point, factor: Scalar) -> Point:
    (a,) = pt.tuples
    return Point(tuples=(a.with_values([v / factor for v in a.values]),))


W_NORMALIZE = register_witness(
    EquivalenceWitness(
        name="W_NORMALIZE",
        source="GANE",
        target="PROD1_SUM",
        reference="Thm 3.1.2",
        description="a -> a / G_n(a), so the product becomes 1",
        forward=lambda pt, wp, ctx: _scaled(pt, geometric_mean(pt.tuples[0], ctx)),
        params={"n": 5},
        plans=({"n": 2}, {"n": 3}, {"n": 5}, {"n": 8}),
        source_params=lambda wp: {"n": wp["n"]},
        target_params=lambda wp: {"n": wp["n"]},
    )
)

W_NORMALIZE_SUM = register_witness(
    EquivalenceWitness(
        name="W_NORMALIZE_SUM",
        source="GANE",
        target="SUM1_PROD",
        reference="Thm 3.1.2",
        description="a -> a / sum(a), so the sum becomes 1",
        forward=lambda pt, wp, ctx: _scaled(pt, ctx.mp.fsum(pt.tuples[0].values)),
        params={"n": 5},
        plans=({"n": 2}, {"n": 3}, {"n": 5}, {"n": 8}),
        source_params=lambda wp: {"n": wp["n"]},
        target_params=lambda wp: {"n": wp["n"]},
    )
)


def doubling(pt: Point, wp: Params, ctx: PrecisionContext) -> Derivation:
    """Cauchy's doubling: pair adjacent block means and apply the two-term inequality at each level.

    c_j is the geometric mean of the 2^(k-j) block means of size 2^j, so
    c_0 = G_n and c_k = A_n.
    """
    (a,) = pt.tuples
    ga2e = lookup("GA2E", None, ctx)
    blocks = list(a.values)
    chain = [geometric_mean(a, ctx)]
    premises = []
    while len(blocks) > 1:
        merged = []
        for left, right in zip(blocks[0::2], blocks[1::2]):
            premises.append((ga2e, Point((left, right))))
            merged.append((left + right) / 2)
        blocks = merged
        chain.append(geometric_mean(_unit_tuple(blocks, ctx), ctx))
    chain[-1] = arithmetic_mean(a, ctx)
    return Derivation(tuple(premises), tuple(chain))


W_DOUBLE = register_witness(
    EquivalenceWitness(
        name="W_DOUBLE",
        source="GA2E",
        target="GANE",
        reference="Thm 3.1.1(i)",
        description="GA2E at every pair of block means yields GANE for n = 2^k",
        kind=WitnessKind.DERIVATION,
        derive=doubling,
        params={"k": 3},
        plans=({"k": 1}, {"k": 2}, {"k": 3}, {"k": 4}),
        target_params=lambda wp: {"n": 2 ** int(wp["k"])},
    )
)


def _repeat_pair(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, y = pt.scalars
    half = 2 ** (int(wp["k"]) - 1)
    return Point(tuples=(_unit_tuple([x] * half + [y] * half, ctx),))


W_DOUBLE_SPECIALIZE = register_witness(
    EquivalenceWitness(
        name="W_DOUBLE_SPECIALIZE",
        source="GA2E",
        target="GANE",
        reference="Thm 3.1.1",
        description="(x, y) -> x and y each repeated 2^(k-1) times",
        forward=_repeat_pair,
        params={"k": 3},
        plans=({"k": 1}, {"k": 2}, {"k": 3}),
        target_params=lambda wp: {"n": 2 ** int(wp["k"])},
    )
)


def _pad_backward(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    (a,) = pt.tuples
    m, n = int(wp["m"]), int(wp["n"])
    tail_weight = a.total_weight(ctx) / m
    padded = WeightedTuple(
        a.values + tuple(a.values[-1] for _ in range(n - m)),
        a.weights + tuple(tail_weight for _ in range(n - m)),
    )
    return Point(tuples=(backward_reduce(padded, m, ctx),))


W_BACKWARD = register_witness(
    EquivalenceWitness(
        name="W_BACKWARD",
        source="GAN",
        target="GAN",
        reference="Thm 3.2.3",
        description="pad an m-tuple to n entries with copies of A_m weighted W_m/m",
        forward=_pad_backward,
        params={"m": 3, "n": 6},
        plans=({"m": 2, "n": 5}, {"m": 3, "n": 6}, {"m": 4, "n": 8}),
        source_params=lambda wp: {"n": wp["m"]},
        target_params=lambda wp: {"n": wp["n"]},
    )
)


def _to_young(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, y, alpha = pt.scalars
    return Point((pow_scalar(x, 1 - alpha, ctx), pow_scalar(y, alpha, ctx), 1 / (1 - alpha)))


def _from_young(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, y, p = pt.scalars
    q = p / (p - 1)
    return Point((pow_scalar(x, p, ctx), pow_scalar(y, q, ctx), 1 / q))


W_YOUNG = register_witness(
    EquivalenceWitness(
        name="W_YOUNG",
        source="GA2W",
        target="YOUNG",
        reference="Lemma 3.2.1",
        description="(X, Y, alpha) -> (X^(1-alpha), Y^alpha, 1/(1-alpha)); inverse (x^p, y^q, 1/q)",
        forward=_to_young,
        backward=_from_young,
        # 1/100 <= alpha <= 99/100 keeps both conjugate exponents below 100
        source_domain=lambda pt, wp, ctx: ctx.mp.mpf("0.01") <= pt.scalars[2] <= ctx.mp.mpf("0.99"),
    )
)


def _rado_rewrite(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    x, y, alpha = pt.scalars
    n = int(wp["n"])
    head = (1 - alpha) / (n - 1)
    t = WeightedTuple(
        tuple(x for _ in range(n - 1)) + (y,),
        tuple(head for _ in range(n - 1)) + (alpha,),
    )
    return Point(tuples=(t,))


def _rado_collapse(pt: Point, wp: Params, ctx: PrecisionContext) -> Point:
    (a,) = pt.tuples
    head = a.prefix(a.n - 1)
    return Point((geometric_mean(head, ctx), a.values[-1], a.weights[-1] / a.total_weight(ctx)))


W_RADO_REWRITE = register_witness(
    EquivalenceWitness(
        name="W_RADO_REWRITE",
        source="GA2W",
        target="RADO",
        reference="Thm 3.2.4.1",
        description="Rado's step is the two-term weighted inequality at (G_{n-1}, a_n) with weight w_n/W_n",
        forward=_rado_rewrite,
        backward=_rado_collapse,
        params={"n": 4},
        plans=({"n": 2}, {"n": 4}, {"n": 6}),
        target_params=lambda wp: {"n": wp["n"]},
        target_round_trip=False,
    )
)
