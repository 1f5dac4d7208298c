"""Scalar powers, logarithms and banded sign classification."""

from __future__ import annotations

from enum import Enum
from typing import Any

from ..errors import NonPositiveBase, Overflow
from .context import PrecisionContext, Scalar

# Extra bits carried through exp(e*log(b)) so the final rounding dominates the error.
_GUARD_BITS = 64


class SignClass(str, Enum):
    """Sign of a value relative to a tolerance band."""

    POSITIVE = "Positive"
    ZERO = "Zero"
    NEGATIVE = "Negative"


def classify_sign(value: Any, scale: Any, ctx: PrecisionContext) -> SignClass:
    """Zero iff |value| <= rel_tolerance * scale, otherwise the sign of value."""
    mp = ctx.mp
    value = mp.mpf(value)
    if mp.fabs(value) <= ctx.band(mp.mpf(scale)):
        return SignClass.ZERO
    return SignClass.POSITIVE if value > 0 else SignClass.NEGATIVE


def check_magnitude(value: Any, ctx: PrecisionContext) -> Scalar:
    """Reject non-finite results and magnitudes beyond ctx.max_exponent_bits."""
    mp = ctx.mp
    if not mp.isfinite(value):
        raise Overflow(f"Non-finite intermediate result {value!r}.")
    if value != 0 and abs(mp.mag(value)) > ctx.max_exponent_bits:
        raise Overflow(f"Magnitude 2^{mp.mag(value)} exceeds 2^{ctx.max_exponent_bits}.")
    return value


def exp_scalar(value: Any, ctx: PrecisionContext) -> Scalar:
    mp = ctx.mp
    value = mp.mpf(value)
    if mp.fabs(value) > ctx.max_exponent_bits * mp.ln2:
        raise Overflow(f"exp argument {mp.nstr(value, 8)} beyond representable range.")
    return mp.exp(value)


def log_scalar(value: Any, ctx: PrecisionContext) -> Scalar:
    mp = ctx.mp
    value = mp.mpf(value)
    if value <= 0:
        raise NonPositiveBase(f"log requires a positive argument, got {mp.nstr(value, 8)}.")
    return mp.log(value)


def pow_scalar(base: Any, exponent: Any, ctx: PrecisionContext) -> Scalar:
    """base**exponent for base > 0, evaluated as exp(exponent*log(base))."""
    mp = ctx.mp
    base = mp.mpf(base)
    exponent = mp.mpf(exponent)
    if base <= 0:
        raise NonPositiveBase(f"Real power requires a positive base, got {mp.nstr(base, 8)}.")
    if exponent == 0 or base == 1:
        return mp.mpf(1)
    limit = ctx.max_exponent_bits * mp.ln2
    with mp.extraprec(_GUARD_BITS):
        power_log = exponent * mp.log(base)
        if mp.fabs(power_log) > limit:
            raise Overflow(
                f"{mp.nstr(base, 8)}^{mp.nstr(exponent, 8)} exceeds 2^{ctx.max_exponent_bits}."
            )
        result = mp.exp(power_log)
    return +result


def int_pow(base: Any, exponent: int, ctx: PrecisionContext) -> Scalar:
    """Integer power of any real base by repeated multiplication."""
    mp = ctx.mp
    result = mp.mpf(base) ** int(exponent)
    return check_magnitude(result, ctx)
