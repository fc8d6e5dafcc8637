"""Exact toolkit for 3-dimensional quadratic AS-regular algebras of Type EC."""

__version__ = "0.1.0"
