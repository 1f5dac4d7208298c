"""Suite configuration and per-entry parameter plans."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from ..catalog import list_catalog, lookup
from ..catalog.registry import DEFAULT_CATALOG
from ..numerics import PrecisionContext

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 1000
DEFAULT_PRECISION = 128

Plan = Mapping[str, Any]


@dataclass(frozen=True)
class EntryPlan:
    """One catalog entry with the parameter plans sampled on V (and on ~V)."""

    name: str
    plans: Tuple[Plan, ...] = ({},)
    complement_plans: Tuple[Plan, ...] = ()

    @classmethod
    def for_entry(cls, name: str) -> "EntryPlan":
        """Plans registered on the entry itself."""
        entry = DEFAULT_CATALOG.get(name)
        return cls(name=name, plans=tuple(entry.default_plans), complement_plans=tuple(entry.complement_plans))

    @classmethod
    def from_dict(cls, payload: Union[str, Mapping[str, Any]]) -> "EntryPlan":
        if isinstance(payload, str):
            return cls.for_entry(payload)
        defaults = cls.for_entry(payload["name"])
        plans = tuple(_plan(p) for p in payload.get("plans", defaults.plans))
        complement_plans = tuple(_plan(p) for p in payload.get("complement_plans", defaults.complement_plans))
        return cls(name=payload["name"], plans=plans or ({},), complement_plans=complement_plans)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "plans": [_plan_text(p) for p in self.plans],
            "complement_plans": [_plan_text(p) for p in self.complement_plans],
        }


def _plan(raw: Mapping[str, Any]) -> Plan:
    # JSON arrays arrive as lists; ranges are (low, high) tuples everywhere else.
    return {k: tuple(v) if isinstance(v, list) else v for k, v in raw.items()}


def _plan_text(plan: Plan) -> Dict[str, Any]:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in sorted(plan.items())}


def default_entries() -> Tuple[EntryPlan, ...]:
    return tuple(EntryPlan.for_entry(listing.name) for listing in list_catalog())


@dataclass(frozen=True)
class SuiteConfig:
    """Everything a suite run depends on; identical configs give identical reports."""

    seed: int = DEFAULT_SEED
    samples_per_entry: int = DEFAULT_SAMPLES
    precision_bits: int = DEFAULT_PRECISION
    boundary_fraction: float = 0.2
    boundary_eps: float = 1e-6
    exact_fraction: float = 0.5
    witness_samples: int = 200
    workers: int = 1
    include_complements: bool = True
    limit_tuples: int = 20
    chain_tuples: int = 50
    limit_tolerance: float = 1e-4
    search_budget: int = 0
    entries: Tuple[EntryPlan, ...] = field(default_factory=default_entries)
    witnesses: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.samples_per_entry < 1:
            raise ValueError("samples_per_entry must be >= 1.")
        if self.witness_samples < 1:
            raise ValueError("witness_samples must be >= 1.")
        for name in ("boundary_fraction", "exact_fraction"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1].")
        if self.workers < 1:
            raise ValueError("workers must be >= 1.")
        if self.search_budget < 0:
            raise ValueError("search_budget must be >= 0.")
        for plan in self.entries:
            lookup(plan.name)

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(precision_bits=self.precision_bits)

    @classmethod
    def default(cls) -> "SuiteConfig":
        return cls()

    @classmethod
    def from_env(cls) -> "SuiteConfig":
        """Read INEQUALITY_OBSERVATORY_* overrides from the environment."""
        return cls(
            seed=int(os.getenv("INEQUALITY_OBSERVATORY_SEED", str(DEFAULT_SEED))),
            samples_per_entry=int(os.getenv("INEQUALITY_OBSERVATORY_SAMPLES", str(DEFAULT_SAMPLES))),
            precision_bits=int(os.getenv("INEQUALITY_OBSERVATORY_PRECISION", str(DEFAULT_PRECISION))),
            workers=int(os.getenv("INEQUALITY_OBSERVATORY_WORKERS", "1")),
        )

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "SuiteConfig":
        """Load a config file mirroring the dataclass fields; unknown keys are rejected."""
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(payload) - known)
        if unknown:
            raise ValueError(f"Unknown config key(s) {', '.join(unknown)}. Expected one of: {', '.join(sorted(known))}.")
        if "entries" in payload:
            payload["entries"] = tuple(EntryPlan.from_dict(item) for item in payload["entries"])
        if payload.get("witnesses") is not None:
            payload["witnesses"] = tuple(payload["witnesses"])
        return cls(**payload)

    def with_overrides(
        self,
        *,
        seed: Optional[int] = None,
        samples: Optional[int] = None,
        precision_bits: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> "SuiteConfig":
        """Copy with the CLI flags applied; None leaves a field unchanged."""
        changes: Dict[str, Any] = {}
        if seed is not None:
            changes["seed"] = seed
        if samples is not None:
            changes["samples_per_entry"] = samples
        if precision_bits is not None:
            changes["precision_bits"] = precision_bits
        if workers is not None:
            changes["workers"] = workers
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "samples_per_entry": self.samples_per_entry,
            "precision_bits": self.precision_bits,
            "boundary_fraction": self.boundary_fraction,
            "boundary_eps": self.boundary_eps,
            "exact_fraction": self.exact_fraction,
            "witness_samples": self.witness_samples,
            "include_complements": self.include_complements,
            "limit_tuples": self.limit_tuples,
            "chain_tuples": self.chain_tuples,
            "limit_tolerance": self.limit_tolerance,
            "search_budget": self.search_budget,
            "entries": [p.name for p in self.entries],
        }
