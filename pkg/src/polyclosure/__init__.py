"""Closure computations for ideals of polynomials under the l1 coefficient norm."""

__version__ = "0.1.0"
