"""Exact verification toolkit for the stabilizer of elementary symmetric polynomials."""

__version__ = "0.1.0"
