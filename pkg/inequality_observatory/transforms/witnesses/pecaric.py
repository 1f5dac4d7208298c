"""Inductive step of the weighted Bernoulli (Pecaric) inequality."""

from __future__ import annotations

from ...catalog import Params, Point, lookup
from ...means import SignedTuple, arithmetic_mean
from ...numerics import PrecisionContext, pow_scalar
from ..registry import register_witness
from ..types import Derivation, EquivalenceWitness, WitnessKind


def pecaric_step(pt: Point, wp: Params, ctx: PrecisionContext) -> Derivation:
    """Split off a_n: the first n-1 terms at normalized weights, then the pair (A_{n-1}, a_n)."""
    (a,) = pt.tuples
    n = a.n
    target = lookup("PECARIC", {"n": n}, ctx)
    head = a.prefix(n - 1)
    head_weight = head.total_weight(ctx)
    normalized = SignedTuple(head.values, tuple(w / head_weight for w in head.weights))
    mean = arithmetic_mean(head, ctx)
    pair = SignedTuple((mean, a.values[-1]), (head_weight, a.weights[-1]))
    lhs, rhs = target.formula(pt, ctx)
    middle = pow_scalar(1 + mean, head_weight, ctx) * pow_scalar(1 + a.values[-1], a.weights[-1], ctx)
    premises = (
        (lookup("PECARIC", {"n": n - 1}, ctx), Point(tuples=(normalized,))),
        (lookup("PECARIC", {"n": 2}, ctx), Point(tuples=(pair,))),
    )
    return Derivation(premises, (lhs, middle, rhs))


W_PECARIC_STEP = register_witness(
    EquivalenceWitness(
        name="W_PECARIC_STEP",
        source="PECARIC",
        target="PECARIC",
        reference="Sec 4.2.3",
        description="PECARIC(n) from PECARIC(n-1) and PECARIC(2)",
        kind=WitnessKind.DERIVATION,
        derive=pecaric_step,
        params={"n": 4},
        plans=({"n": 2}, {"n": 3}, {"n": 4}, {"n": 6}),
        source_params=lambda wp: {"n": wp["n"] - 1},
        target_params=lambda wp: {"n": wp["n"]},
    )
)
