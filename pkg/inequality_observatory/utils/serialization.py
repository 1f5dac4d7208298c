"""Text forms of scalars for reports."""

from __future__ import annotations

from typing import Any

import mpmath

REPORT_DIGITS = 30


def scalar_text(value: Any, digits: int = REPORT_DIGITS) -> str:
    """Decimal text with a fixed number of significant digits."""
    if isinstance(value, (int, str)):
        return str(value)
    return mpmath.nstr(value, digits)


def short_text(value: Any) -> str:
    """Human-facing form, e.g. margin=0.5."""
    return scalar_text(value, 15)
