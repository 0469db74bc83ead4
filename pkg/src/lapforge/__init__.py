"""Exact computations with vertex- and edge-weighted graph Laplacians."""

__version__ = "0.1.0"
