"""Exact polynomial arithmetic and ideal theory over F_p and Q."""

from .field import PrimeField, RationalField, field_from_name
from .groebner import Basis, Engine, groebner_basis
from .ideal import (
    Ideal,
    QuotientRing,
    divide_exact,
    engine_for,
    groebner_basis_of,
    height,
    ideal_intersect,
    ideal_quotient,
    krull_dim,
    normal_form,
    poly_to_vec,
    radical_membership,
    vec_to_poly,
)
from .parse import parse_poly
from .poly import MonomialOrder, Poly, PolyRing
from .primality import PrimeResult, find_factor, is_prime

__all__ = [
    "Basis",
    "Engine",
    "Ideal",
    "MonomialOrder",
    "Poly",
    "PolyRing",
    "PrimeField",
    "PrimeResult",
    "QuotientRing",
    "RationalField",
    "divide_exact",
    "engine_for",
    "field_from_name",
    "find_factor",
    "groebner_basis",
    "groebner_basis_of",
    "height",
    "ideal_intersect",
    "ideal_quotient",
    "is_prime",
    "krull_dim",
    "normal_form",
    "parse_poly",
    "poly_to_vec",
    "radical_membership",
    "vec_to_poly",
]
