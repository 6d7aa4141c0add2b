"""Exact engine for the quantum-torus representation and the topological vertex."""

__version__ = "0.1.0"
