"""Catalog entries; importing this package registers them in DEFAULT_CATALOG."""

from . import arithmetic_geometric, bernoulli, holder, power_means

__all__ = ["arithmetic_geometric", "bernoulli", "holder", "power_means"]
