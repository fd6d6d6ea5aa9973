"""Singular locus by the Jacobian criterion, its codimension, and support tests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotEquidimensional
from .ring_kernel import Ideal, QuotientRing, radical_membership
from .ring_kernel.ideal import krull_dim_from_gb, groebner_polys


def determinant(rows):
    """Laplace expansion along the first row; fine for the small minors used here."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0].ring.zero()


def ambient_codim(R: QuotientRing) -> int:
    """Codimension of the defining ideal in the ambient polynomial ring."""
    return R.nvars - R.dim


def jacobian_minors(R: QuotientRing, size: int):
    S = R.ambient
    gens = list(R.relations) or []
    jac = [[g.diff(i) for i in range(S.nvars)] for g in gens]
    out = []
    for rows in itertools.combinations(range(len(gens)), size):
        for cols in itertools.combinations(range(S.nvars), size):
            m = determinant([[jac[r][c] for c in cols] for r in rows])
            if m:
                out.append(m)
    return out


@dataclass
class SingularityData:
    ring: QuotientRing
    sing_ideal: Ideal
    codim_sing: int
    isolated: bool


_CACHE: dict = {}


def sing_ideal(R: QuotientRing) -> Ideal:
    """J + (c0 x c0 minors of the Jacobian), pushed into R."""
    key = ("sing", R.key())
    if key in _CACHE:
        return _CACHE[key]
    R.require_equidimensional("sing_ideal")
    c0 = ambient_codim(R)
    if c0 == 0:
        result = Ideal(R, [R.one()])
    else:
        result = Ideal(R, jacobian_minors(R, c0))
    _CACHE[key] = result
    return result


def is_regular_ring(R: QuotientRing) -> bool:
    return sing_ideal(R).is_unit()


def sing_is_everything(R: QuotientRing) -> bool:
    """Every prime is singular: each generator of the singular ideal is nilpotent."""
    sing = sing_ideal(R)
    zero = R.zero_ideal()
    return all(radical_membership(g, zero) for g in sing.generators())


def codim_sing(R: QuotientRing) -> int:
    """Largest height of a regular prime; -1 when no prime is regular.

    For an equidimensional affine ring a nonempty regular locus is open and
    contains a maximal ideal, all of which have height dim R.
    """
    if sing_is_everything(R):
        return -1
    return R.dim


def is_isolated_singularity(R: QuotientRing) -> bool:
    """Singular, and the singular locus is exactly the irrelevant ideal (all variables)."""
    sing = sing_ideal(R)
    if sing.is_unit():
        return False
    if not all(radical_membership(v, sing) for v in R.gens()):
        return False
    # √sing = m also needs sing ⊆ m, i.e. the origin is on V(sing)
    return all(not g.evaluate([0] * R.nvars) for g in sing.groebner())


def singularity_data(R: QuotientRing) -> SingularityData:
    return SingularityData(R, sing_ideal(R), codim_sing(R), is_isolated_singularity(R))


def in_sing(p: Ideal) -> bool:
    """Is the prime p a singular point (sing_ideal ⊆ p)?"""
    return p.contains_ideal(sing_ideal(p.ring))


def supported_in_sing(M) -> bool:
    """Supp M ⊆ Sing R, decided as sing_ideal ⊆ √Ann(M)."""
    from .module_kernel import annihilator

    if M.ngens == 0:
        return True
    ann = annihilator(M)
    if ann.is_unit():
        return True
    return all(radical_membership(g, ann) for g in sing_ideal(M.ring).generators())


__all__ = [
    "NotEquidimensional",
    "SingularityData",
    "codim_sing",
    "determinant",
    "in_sing",
    "is_isolated_singularity",
    "is_regular_ring",
    "sing_ideal",
    "singularity_data",
    "supported_in_sing",
]
