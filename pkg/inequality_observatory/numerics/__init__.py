"""High-precision scalar arithmetic and sign classification."""

from .context import DEFAULT_CONTEXT, PrecisionContext, Scalar, default_tolerance
from .extended import ExtendedKind, ExtendedReal
from .scalar import (
    SignClass,
    check_magnitude,
    classify_sign,
    exp_scalar,
    int_pow,
    log_scalar,
    pow_scalar,
)

__all__ = [
    "DEFAULT_CONTEXT",
    "PrecisionContext",
    "Scalar",
    "default_tolerance",
    "ExtendedKind",
    "ExtendedReal",
    "SignClass",
    "check_magnitude",
    "classify_sign",
    "exp_scalar",
    "int_pow",
    "log_scalar",
    "pow_scalar",
]
