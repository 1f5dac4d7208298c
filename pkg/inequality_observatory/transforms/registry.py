"""Registry of equivalence witnesses."""

from __future__ import annotations

from typing import Dict, List, Optional

from ..errors import UnknownName
from .types import EquivalenceWitness


class WitnessRegistry:
    """In-memory registry of witnesses, kept in registration order."""

    def __init__(self) -> None:
        self._witnesses: Dict[str, EquivalenceWitness] = {}

    def register(self, witness: EquivalenceWitness) -> EquivalenceWitness:
        self._witnesses[witness.name] = witness
        return witness

    def get(self, name: str) -> EquivalenceWitness:
        try:
            return self._witnesses[name]
        except KeyError:
            raise UnknownName(f"Unknown witness '{name}'. Expected one of: {', '.join(self._witnesses)}.") from None

    def all(self) -> Dict[str, EquivalenceWitness]:
        return dict(self._witnesses)

    def names(self) -> List[str]:
        return list(self._witnesses)


DEFAULT_WITNESSES = WitnessRegistry()


def register_witness(witness: EquivalenceWitness, registry: Optional[WitnessRegistry] = None) -> EquivalenceWitness:
    return (registry or DEFAULT_WITNESSES).register(witness)


def get_witness(name: str, registry: Optional[WitnessRegistry] = None) -> EquivalenceWitness:
    return (registry or DEFAULT_WITNESSES).get(name)


def list_witnesses(registry: Optional[WitnessRegistry] = None) -> List[EquivalenceWitness]:
    return list((registry or DEFAULT_WITNESSES).all().values())
