"""Cubic serendipity bases on squares and cubes.

Exact construction and verification of the 12-function (square) and
32-function (cube) cubic serendipity bases in Bernstein and Hermite style,
their coefficient matrices against tensor-product bases, the associated
degrees of freedom, and a floating-point Poisson lab demonstrating cubic
convergence with fewer unknowns than tensor-product elements.
"""

from serencube.ratpoly import AffineMap1D, MultiPoly, superlinear_degree

__all__ = ["AffineMap1D", "MultiPoly", "superlinear_degree"]
__version__ = "0.1.0"
