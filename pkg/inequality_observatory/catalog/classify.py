"""Point classification and descriptor transformations."""

from __future__ import annotations

from typing import Optional

from ..errors import EvaluationOverflow, Overflow
from ..numerics import PrecisionContext, SignClass, classify_sign
from .descriptor import InequalityDescriptor
from .types import Direction, Point, PointClassification, Verdict

_VERDICTS = {
    SignClass.POSITIVE: Verdict.STRICT,
    SignClass.ZERO: Verdict.EQUALITY,
    SignClass.NEGATIVE: Verdict.VIOLATED,
}


def classify(
    d: InequalityDescriptor,
    pt: Point,
    ctx: Optional[PrecisionContext] = None,
) -> PointClassification:
    """OutsideValidity off V; otherwise the banded sign of the directed margin."""
    ctx = ctx or PrecisionContext()
    pt = pt.at_precision(ctx)
    if not d.validity(pt, ctx):
        return PointClassification(Verdict.OUTSIDE)
    try:
        lhs, rhs = d.formula(pt, ctx)
    except EvaluationOverflow:
        raise
    except Overflow as exc:
        raise EvaluationOverflow(f"{d.name}: {exc}") from exc
    margin = rhs - lhs if d.direction is Direction.LEQ else lhs - rhs
    scale = ctx.scale_of(lhs, rhs)
    return PointClassification(_VERDICTS[classify_sign(margin, scale, ctx)], lhs, rhs, margin, scale)


def complementary(d: InequalityDescriptor) -> InequalityDescriptor:
    """Same formula, direction reversed, validity replaced by the registered ~V."""
    return d.complement()


def flipped(d: InequalityDescriptor) -> InequalityDescriptor:
    """Same V and E with the direction reversed; a false statement off E."""
    return d.flipped()
