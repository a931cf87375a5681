"""Exact-arithmetic toolkit for finite-dimensional Leibniz algebras:
Yang-Baxter solutions, bialgebra classification, doubles, and weight-lambda
Rota-Baxter correspondences, all over the rationals."""

__version__ = "0.1.0"
