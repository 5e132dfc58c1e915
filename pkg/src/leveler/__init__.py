"""Reduced braid group of the torus, torus words and levelings of (1,1)-knots."""

__version__ = "0.1.0"
