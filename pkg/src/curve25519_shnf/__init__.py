"""Sparse Horner normal forms and a computational check of the Curve25519
group law."""

__version__ = "0.1.0"
