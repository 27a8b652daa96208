"""Exact checks and invariants for Hopf (co)module algebra structures on finite-dimensional algebras."""

__version__ = "0.1.0"
