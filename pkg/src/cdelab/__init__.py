"""Exact decomposition and Cartan matrices over a one-parameter local ring."""

__version__ = "0.1.0"
