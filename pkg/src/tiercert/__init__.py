"""Tier certificates for modules over affine algebras."""
