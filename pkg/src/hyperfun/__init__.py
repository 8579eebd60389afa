"""Elliptic, hyperbolic and trigonometric univariate hypergeometric integrals.

The library evaluates the seven-parameter hypergeometric integrals of
elliptic, hyperbolic and trigonometric type, the Weyl-group machinery
(E8 > E7 > E6 > D6/D5) acting on their parameter spaces, the Ruijsenaars
R-function and the Askey-Wilson function, and ships a registry that
numerically verifies every symmetry, evaluation, contiguous relation and
degeneration among them.
"""

from . import errors, gammas, integrals, rootsys, series, special, verify

__all__ = ["errors", "gammas", "integrals", "rootsys", "series", "special", "verify"]

__version__ = "0.1.0"
