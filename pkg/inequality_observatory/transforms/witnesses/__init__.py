"""Built-in equivalence witnesses; importing this package registers them."""

from . import arithmetic_geometric, bernoulli, holder, pecaric, power_means

__all__ = ["arithmetic_geometric", "bernoulli", "holder", "pecaric", "power_means"]
