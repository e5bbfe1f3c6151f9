"""Exact support computations for rational Cherednik algebras of finite Coxeter groups."""

__version__ = "0.1.0"
