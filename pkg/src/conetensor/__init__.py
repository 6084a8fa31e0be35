"""Exact projective and injective tensor products of polyhedral cones."""

__version__ = "0.1.0"
