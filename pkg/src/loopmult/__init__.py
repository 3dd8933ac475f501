"""Exact multiplicity tables for finite-dimensional representations of
hyper loop algebras over finite fields.

The core objects are loop weights in canonical factored form (finitely
supported maps from nonzero spectral parameters to integral weights),
their Galois orbits over a chosen base field, and the character /
multiplicity formulas that reduce questions over the base field to
computations over its algebraic closure.
"""

__version__ = "0.1.0"
