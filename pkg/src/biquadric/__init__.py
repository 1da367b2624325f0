"""Exact stability analysis of bidegree-(2,2) divisors on P^1 x P^2."""

__version__ = "1.0.0"
