"""Obstructions to polynomial surjections Z x Z -> N."""

__version__ = "0.1.0"
