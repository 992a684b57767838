"""Exact-arithmetic engines for walled Brauer diagram categories."""

__version__ = "0.1.0"
