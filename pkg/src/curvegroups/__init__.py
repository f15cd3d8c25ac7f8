"""Exact computations with braid monodromy, curve complement groups and ADE data."""

__version__ = "0.1.0"
