"""Exact symbolic workbench for the threefold cusp x^2 - y^3 - z^2 + w^3."""

__version__ = "1.0.0"
