"""Extended reals for power-mean exponents."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Union

import mpmath

from ..errors import InvalidScalar
from .context import PrecisionContext, Scalar


class ExtendedKind(str, Enum):
    FINITE = "Finite"
    POS_INFINITY = "PosInfinity"
    NEG_INFINITY = "NegInfinity"


_RANK = {ExtendedKind.NEG_INFINITY: -1, ExtendedKind.FINITE: 0, ExtendedKind.POS_INFINITY: 1}


@dataclass(frozen=True)
class ExtendedReal:
    """A finite scalar or one of the two infinities."""

    kind: ExtendedKind
    value: Optional[Scalar] = None

    @classmethod
    def finite(cls, value: Any, ctx: Optional[PrecisionContext] = None) -> "ExtendedReal":
        ctx = ctx or PrecisionContext()
        return cls(ExtendedKind.FINITE, ctx.scalar(value))

    @classmethod
    def pos_infinity(cls) -> "ExtendedReal":
        return cls(ExtendedKind.POS_INFINITY)

    @classmethod
    def neg_infinity(cls) -> "ExtendedReal":
        return cls(ExtendedKind.NEG_INFINITY)

    @classmethod
    def parse(cls, value: Union["ExtendedReal", str, int, float, Any], ctx: Optional[PrecisionContext] = None) -> "ExtendedReal":
        """Accept an ExtendedReal, a number, or one of 'inf', '+inf', '-inf'."""
        if isinstance(value, ExtendedReal):
            return value
        if isinstance(value, str):
            text = value.strip().lower()
            if text in {"inf", "+inf", "infinity", "+infinity"}:
                return cls.pos_infinity()
            if text in {"-inf", "-infinity"}:
                return cls.neg_infinity()
        if isinstance(value, float) and mpmath.isinf(value):
            return cls.pos_infinity() if value > 0 else cls.neg_infinity()
        if hasattr(value, "_mpf_") and mpmath.isinf(value):
            return cls.pos_infinity() if value > 0 else cls.neg_infinity()
        return cls.finite(value, ctx)

    def __post_init__(self) -> None:
        if self.kind is ExtendedKind.FINITE and self.value is None:
            raise InvalidScalar("Finite extended real needs a value.")

    @property
    def is_finite(self) -> bool:
        return self.kind is ExtendedKind.FINITE

    def _key(self) -> tuple:
        return (_RANK[self.kind], self.value if self.is_finite else 0)

    def __lt__(self, other: "ExtendedReal") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "ExtendedReal") -> bool:
        return self._key() <= other._key()

    def __str__(self) -> str:
        if self.kind is ExtendedKind.POS_INFINITY:
            return "inf"
        if self.kind is ExtendedKind.NEG_INFINITY:
            return "-inf"
        return mpmath.nstr(self.value, 30)
