"""Simple-module dimensions, p-subgroup complexes and lower bounds for finite permutation groups."""

__version__ = "0.1.0"
