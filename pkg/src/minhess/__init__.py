"""Invariants of minimal-nilpotent Hessenberg varieties in type A."""

from .hess import HessFn

__version__ = "0.1.0"

__all__ = ["HessFn", "__version__"]
