"""Inequality catalog: entries, descriptors, registry and point classification."""

from .classify import classify, complementary, flipped
from .descriptor import InequalityDescriptor
from .entry import InequalityEntry, Params
from .regions import Region, RegionEntry
from .registry import DEFAULT_CATALOG, CatalogRegistry, catalog_entry, list_catalog, lookup
from .types import (
    CatalogListing,
    Direction,
    ParamKind,
    ParamSpec,
    Point,
    PointClassification,
    Side,
    Verdict,
)

from . import entries  # noqa: E402  registers the built-in entries

__all__ = [
    "classify",
    "complementary",
    "flipped",
    "InequalityDescriptor",
    "InequalityEntry",
    "Params",
    "Region",
    "RegionEntry",
    "DEFAULT_CATALOG",
    "CatalogRegistry",
    "catalog_entry",
    "list_catalog",
    "lookup",
    "CatalogListing",
    "Direction",
    "ParamKind",
    "ParamSpec",
    "Point",
    "PointClassification",
    "Side",
    "Verdict",
    "entries",
]
