"""Exact algebra for rank-3 instanton Floer computations."""

__version__ = "0.1.0"
