"""Exact computer algebra for the N=1 Ramond superalgebra and its weight modules."""

__version__ = "0.1.0"
