"""Exact-arithmetic construction and verification of anti-invariant
Riemannian submersions built from left-invariant metrics on Lie groups."""

__version__ = "0.1.0"
