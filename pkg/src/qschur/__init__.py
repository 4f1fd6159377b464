"""Quasisymmetric Schur functions, Demazure atoms and nonsymmetric Macdonald polynomials in exact arithmetic."""

__version__ = "0.1.0"
