"""Canonical JSON hashing and seed derivation."""

from __future__ import annotations

import hashlib
import json
from typing import Any


def canonical_json(value: Any) -> str:
    """Stable JSON text: sorted keys, no whitespace, str() fallback."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), default=str)


def sha256_hex(value: str) -> str:
    """Return SHA-256 hex digest for the provided string value."""
    return hashlib.sha256(value.encode("utf-8")).hexdigest()


def derive_seed(*parts: Any) -> int:
    """64-bit seed from the canonical JSON of the parts.

    Used as hash(master seed, label, index) so per-sample streams do not
    depend on evaluation order.
    """
    digest = hashlib.sha256(canonical_json(list(parts)).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def report_digest(payload: Any) -> str:
    """Digest of a report payload, used to compare runs."""
    return sha256_hex(canonical_json(payload))
