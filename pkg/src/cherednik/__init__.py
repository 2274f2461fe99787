"""Rational Cherednik algebras of S3 in positive characteristic."""
from .ffield import make_field, generic_c
from .verma import make_params, build_irreducible, hilbert, character

__all__ = ["make_field", "generic_c", "make_params", "build_irreducible", "hilbert", "character"]
