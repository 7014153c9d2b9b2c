"""Exact combinatorics of minuscule weights, clean cycles and Euler
characteristics for subvarieties of abelian varieties."""

__version__ = "0.1.0"
