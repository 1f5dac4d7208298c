"""Hashing and serialization helpers."""

from .hashing import canonical_json, derive_seed, report_digest, sha256_hex
from .serialization import REPORT_DIGITS, scalar_text, short_text

__all__ = [
    "canonical_json",
    "derive_seed",
    "report_digest",
    "sha256_hex",
    "REPORT_DIGITS",
    "scalar_text",
    "short_text",
]
