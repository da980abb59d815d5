"""Finite-carrier skew braces, Rota-Baxter operators, and their cohomology."""

__version__ = "0.1.0"
