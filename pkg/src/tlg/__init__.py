"""Exact arithmetic for Laurent-polynomial mirror models of Fano varieties."""

__version__ = "0.1.0"
