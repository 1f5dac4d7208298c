"""Registry of catalog entries."""

from __future__ import annotations

from typing import Any, Callable, Dict, List, Mapping, Optional, Type

from ..errors import UnknownName
from ..numerics import PrecisionContext
from .descriptor import InequalityDescriptor
from .entry import InequalityEntry
from .types import CatalogListing, Side


class CatalogRegistry:
    """In-memory registry of inequality entries, kept in registration order."""

    def __init__(self) -> None:
        self._entries: Dict[str, InequalityEntry] = {}

    def register(self, entry: InequalityEntry) -> None:
        self._entries[entry.name] = entry

    def get(self, name: str) -> InequalityEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownName(f"Unknown inequality '{name}'. Expected one of: {', '.join(self._entries)}.") from None

    def all(self) -> Dict[str, InequalityEntry]:
        return dict(self._entries)

    def names(self) -> List[str]:
        return list(self._entries)

    def copy(self) -> "CatalogRegistry":
        clone = CatalogRegistry()
        for entry in self._entries.values():
            clone.register(entry)
        return clone

    def lookup(
        self,
        name: str,
        params: Optional[Mapping[str, Any]] = None,
        ctx: Optional[PrecisionContext] = None,
    ) -> InequalityDescriptor:
        entry = self.get(name)
        normalized = entry.normalize_params(params, ctx or PrecisionContext())
        return InequalityDescriptor(entry=entry, params=normalized, direction=entry.direction, side=Side.PRIMARY)


def catalog_entry(registry: Optional[CatalogRegistry] = None) -> Callable[[Type[InequalityEntry]], Type[InequalityEntry]]:
    """Class decorator registering one instance of the entry class."""

    def decorator(cls: Type[InequalityEntry]) -> Type[InequalityEntry]:
        (registry or DEFAULT_CATALOG).register(cls())
        return cls

    return decorator


DEFAULT_CATALOG = CatalogRegistry()


def _registry(registry: Optional[CatalogRegistry]) -> CatalogRegistry:
    return DEFAULT_CATALOG if registry is None else registry


def lookup(
    name: str,
    params: Optional[Mapping[str, Any]] = None,
    ctx: Optional[PrecisionContext] = None,
    *,
    registry: Optional[CatalogRegistry] = None,
) -> InequalityDescriptor:
    """Descriptor for a registered entry with validated parameters."""
    return _registry(registry).lookup(name, params, ctx)


def list_catalog(registry: Optional[CatalogRegistry] = None) -> List[CatalogListing]:
    """Every registered entry once, in registration order."""
    return [entry.listing() for entry in _registry(registry).all().values()]

