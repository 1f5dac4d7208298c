"""Precision contexts backing all scalar arithmetic."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

import mpmath

from ..errors import InvalidContext, InvalidScalar

Scalar = mpmath.mpf

_LOCAL = threading.local()


def _mp_context(bits: int) -> mpmath.MPContext:
    # One MPContext per (thread, precision); nothing ever touches the global mp.prec.
    contexts: Optional[Dict[int, mpmath.MPContext]] = getattr(_LOCAL, "contexts", None)
    if contexts is None:
        contexts = {}
        _LOCAL.contexts = contexts
    mp = contexts.get(bits)
    if mp is None:
        mp = mpmath.MPContext()
        mp.prec = bits
        contexts[bits] = mp
    return mp


def default_tolerance(precision_bits: int) -> Scalar:
    """Default relative classification band for a precision."""
    return mpmath.ldexp(mpmath.mpf(1), -((3 * precision_bits) // 4))


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision, classification band and magnitude limits."""

    precision_bits: int = 128
    rel_tolerance: Optional[Any] = None
    abs_floor: Any = 1
    max_exponent_bits: int = 1 << 22

    def __post_init__(self) -> None:
        if not isinstance(self.precision_bits, int) or self.precision_bits < 64:
            raise InvalidContext(f"precision_bits must be an integer >= 64, got {self.precision_bits!r}.")
        if self.max_exponent_bits < self.precision_bits:
            raise InvalidContext("max_exponent_bits must be at least precision_bits.")
        mp = self.mp
        tolerance = default_tolerance(self.precision_bits) if self.rel_tolerance is None else mp.mpf(self.rel_tolerance)
        floor = mp.mpf(self.abs_floor)
        if not tolerance > 0:
            raise InvalidContext("rel_tolerance must be positive.")
        if tolerance < mp.ldexp(mp.mpf(1), -self.precision_bits + 8):
            raise InvalidContext(
                f"rel_tolerance {mpmath.nstr(tolerance, 5)} is finer than {self.precision_bits}-bit arithmetic can resolve."
            )
        if not floor > 0:
            raise InvalidContext("abs_floor must be positive.")
        object.__setattr__(self, "rel_tolerance", tolerance)
        object.__setattr__(self, "abs_floor", floor)

    @property
    def mp(self) -> mpmath.MPContext:
        """Thread-local mpmath context at this precision."""
        return _mp_context(self.precision_bits)

    @classmethod
    def from_env(cls) -> "PrecisionContext":
        """Build a context from INEQUALITY_OBSERVATORY_* environment variables."""
        bits = int(os.getenv("INEQUALITY_OBSERVATORY_PRECISION", "128"))
        tolerance = os.getenv("INEQUALITY_OBSERVATORY_TOLERANCE")
        return cls(precision_bits=bits, rel_tolerance=tolerance)

    def elevated(self, factor: int = 4) -> "PrecisionContext":
        """Context with `factor` times the bits and a correspondingly finer band."""
        return PrecisionContext(
            precision_bits=self.precision_bits * factor,
            abs_floor=self.abs_floor,
            max_exponent_bits=self.max_exponent_bits,
        )

    def scalar(self, value: Any) -> Scalar:
        """Convert a number or numeric string to a finite scalar at this precision."""
        mp = self.mp
        try:
            result = mp.mpf(value)
        except (TypeError, ValueError) as exc:
            raise InvalidScalar(f"Cannot read {value!r} as a real number.") from exc
        if not mp.isfinite(result):
            raise InvalidScalar(f"Scalar must be finite, got {value!r}.")
        return result

    def scalars(self, values: Iterable[Any]) -> Tuple[Scalar, ...]:
        return tuple(self.scalar(value) for value in values)

    def band(self, scale: Any) -> Scalar:
        """Half-width of the Zero band at the given scale."""
        return self.rel_tolerance * scale

    def scale_of(self, *values: Any) -> Scalar:
        """max(|v| for v in values, abs_floor)."""
        mp = self.mp
        return max([mp.fabs(v) for v in values] + [mp.mpf(self.abs_floor)])

    def approx_equal(self, left: Any, right: Any) -> bool:
        """Equality within the classification band."""
        mp = self.mp
        return mp.fabs(mp.mpf(left) - mp.mpf(right)) <= self.band(self.scale_of(left, right))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "precision_bits": self.precision_bits,
            "rel_tolerance": mpmath.nstr(self.rel_tolerance, 6),
            "abs_floor": mpmath.nstr(self.abs_floor, 6),
        }


DEFAULT_CONTEXT = PrecisionContext()
