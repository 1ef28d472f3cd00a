"""Exact calculus for coefficient sets and log canonical threshold sets of
bounded coregularity, with dual-complex and toric-pair computations."""

from .setalg import CoeffSet, DomainError, EnumBounds

__all__ = ["CoeffSet", "DomainError", "EnumBounds"]
__version__ = "0.1.0"
