"""Point and parameter draws for the checker."""

from __future__ import annotations

from dataclasses import replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..catalog import InequalityDescriptor, Point
from ..catalog.sampling import draw_params
from ..numerics import PrecisionContext
from .config import Plan


class SampleOrigin(str, Enum):
    INTERIOR = "interior"
    NEAR_EQUALITY = "near_equality"
    EQUALITY = "equality"


def with_plan(d: InequalityDescriptor, plan: Plan, rng: np.random.Generator, ctx: PrecisionContext) -> InequalityDescriptor:
    """d with its parameters redrawn from plan; side, direction and formula are kept."""
    if not plan:
        return d
    drawn = draw_params(plan, rng, ctx)
    return replace(d, params=d.entry.normalize_params({**d.params, **drawn}, ctx))


def draw_sample(
    d: InequalityDescriptor,
    rng: np.random.Generator,
    ctx: PrecisionContext,
    *,
    boundary_fraction: float = 0.0,
    boundary_eps: float = 1e-6,
    exact_fraction: float = 0.0,
) -> Tuple[Point, SampleOrigin]:
    """A point of d's validity set and where it came from.

    With probability boundary_fraction the point is built from the equality
    set: exactly on it with probability exact_fraction, otherwise perturbed
    by relative boundary_eps. Entries with an empty equality set fall back
    to the interior sampler.
    """
    if boundary_fraction and rng.random() < boundary_fraction:
        exact = rng.random() < exact_fraction
        pt = d.near_equality(rng, 0.0 if exact else boundary_eps, ctx)
        if pt is not None:
            return pt, SampleOrigin.EQUALITY if exact else SampleOrigin.NEAR_EQUALITY
    return d.sample(rng, ctx), SampleOrigin.INTERIOR


def sample_point(
    d: InequalityDescriptor,
    rng: np.random.Generator,
    ctx: Optional[PrecisionContext] = None,
    *,
    boundary_fraction: float = 0.0,
    boundary_eps: float = 1e-6,
) -> Point:
    """Point in V of d; raises SamplerMissing when d has no sampler."""
    ctx = ctx or PrecisionContext()
    pt, _ = draw_sample(d, rng, ctx, boundary_fraction=boundary_fraction, boundary_eps=boundary_eps)
    return pt
