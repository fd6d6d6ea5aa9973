"""Layered primality decisions for ideals of affine algebras over F_p.

Layers, tried in order on the preimage P = I + J in the ambient ring:

* L1  reduced basis is linear, so S/P is a polynomial ring.
* L2  after substituting away linear basis elements, the rest is principal
      in at most three variables; bounded factor search decides.
* L3  S/P is finite; exhaustive zero-divisor search in the finite ring.
* L4  undecided.

A cheap factor scan over the basis elements runs first, so many non-primes
come back with a witness before the layered test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ..errors import UsageError
from .ideal import Ideal, QuotientRing, divide_exact, groebner_polys
from .poly import Poly, PolyRing

FACTOR_CANDIDATE_CAP = 20000
FINITE_RING_CAP = 4000
MAX_FACTOR_VARS = 3


@dataclass(frozen=True)
class PrimeResult:
    status: str  # "prime" | "not_prime" | "undecided"
    layer: str
    witness: Optional[tuple] = None  # (f, g) with fg in I, f, g not in I

    @property
    def is_prime(self) -> bool:
        return self.status == "prime"

    @property
    def is_not_prime(self) -> bool:
        return self.status == "not_prime"

    @property
    def undecided(self) -> bool:
        return self.status == "undecided"


def _monomials_upto(nvars: int, d: int, exact: bool = False):
    out = []
    for total in ([d] if exact else range(d + 1)):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            m = [0] * nvars
            for i in combo:
                m[i] += 1
            out.append(tuple(m))
    return out


def find_factor(g: Poly, cap: int = FACTOR_CANDIDATE_CAP):
    """Search a nontrivial factorisation g = u*v by enumerating monic u.

    Returns (u, v), None if irreducible within the search, or "cap" when the
    candidate space exceeds ``cap``.
    """
    ring = g.ring
    field = ring.field
    if not field.p:
        return "cap"
    support = sorted(g.support_vars())
    if len(support) > MAX_FACTOR_VARS:
        return "cap"
    deg = g.degree()
    homog = g.is_homogeneous()
    k = len(support)
    p = field.p
    for d in range(1, deg // 2 + 1):
        local = _monomials_upto(k, d, exact=homog)
        if p ** len(local) > cap * (p - 1) + 1:
            return "cap"
        monos = []
        for lm in local:
            full = [0] * ring.nvars
            for idx, e in zip(support, lm):
                full[idx] = e
            monos.append(tuple(full))
        monos.sort(key=ring.order.key, reverse=True)
        # leading coefficient 1 on the first nonzero position (in order)
        for lead in range(len(monos)):
            rest = monos[lead + 1 :]
            if sum(monos[lead]) != d and all(sum(m) != d for m in rest):
                continue
            for coeffs in itertools.product(range(p), repeat=len(rest)):
                terms = {monos[lead]: 1}
                for m, c in zip(rest, coeffs):
                    if c:
                        terms[m] = c
                u = Poly(ring, terms)
                if u.degree() != d:
                    continue
                v = divide_exact(g, u)
                if v is not None and not v.is_constant():
                    return u, v
    return None


def _linear_split(ring: PolyRing, gb):
    """Drop linear basis elements; return (remaining polys, remaining var indices)."""
    eliminated = set()
    rest = []
    for g in gb:
        if g.degree() == 1:
            lm = g.lm()
            eliminated.add(next(i for i, e in enumerate(lm) if e))
        else:
            rest.append(g)
    keep = [i for i in range(ring.nvars) if i not in eliminated]
    return rest, keep


def _finite_ring_zero_divisor(P: Ideal, cap: int):
    """Search S/P (finite) for a zero-divisor pair; returns (witness, exhaustive)."""
    S = P.ring.ambient
    field = S.field
    p = field.p
    basis = P.standard_monomials(limit=64)
    if basis is None or not p:
        return None, False
    D = len(basis)
    index = {m: i for i, m in enumerate(basis)}

    def coords(f: Poly):
        r = P.normal_form(f)
        v = [0] * D
        for m, c in r.terms.items():
            v[index[m]] = c
        return v

    def elem(vec):
        return S.from_terms({basis[i]: c for i, c in enumerate(vec) if c})

    mono_images = [S.monomial(m) for m in basis]

    def kernel_vector(f: Poly):
        # columns: f * basis_j in coordinates; solve M y = 0 over F_p
        cols = [coords(f * b) for b in mono_images]
        rows = [[cols[j][i] for j in range(D)] for i in range(D)]
        return _nullvec(rows, D, p)

    candidates = [S.monomial(m) for m in basis if any(m)]
    for f in candidates:
        y = kernel_vector(f)
        if y is not None:
            return (f, elem(y)), False
    total = (p**D - 1) // (p - 1)
    if total > cap:
        return None, False
    for vec in itertools.product(range(p), repeat=D):
        nz = next((c for c in vec if c), 0)
        if nz != 1:
            continue
        f = elem(vec)
        y = kernel_vector(f)
        if y is not None:
            return (f, elem(y)), True
    return None, True


def _nullvec(rows, ncols, p):
    """A nonzero solution of rows * y = 0 over F_p, or None."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                fac = m[i][c]
                m[i] = [(a - fac * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    fc = free[0]
    y = [0] * ncols
    y[fc] = 1
    for i, c in enumerate(pivots):
        y[c] = (-m[i][fc]) % p
    return y


def _check_witness(P: Ideal, f: Poly, g: Poly) -> bool:
    return bool(P.normal_form(f)) and bool(P.normal_form(g)) and not P.normal_form(f * g)


def is_prime(I: Ideal, R: QuotientRing | None = None) -> PrimeResult:
    R = R or I.ring
    if I.ring != R:
        raise UsageError("ideal not in the given ring")
    if I.is_unit():
        raise UsageError("primality of the unit ideal is undefined")
    S = R.ambient
    P = Ideal(QuotientRing(S), I.groebner())
    gb = P.groebner()

    rest, keep = _linear_split(S, gb)
    if not rest:
        return PrimeResult("prime", "L1")

    # quick factor scan for a zero-divisor witness
    for g in rest:
        if S.field.p and len(g.support_vars()) <= MAX_FACTOR_VARS:
            fac = find_factor(g, cap=2000)
            if isinstance(fac, tuple) and _check_witness(P, *fac):
                return PrimeResult("not_prime", "L2", fac)

    if len(rest) == 1 and len(rest[0].support_vars()) <= MAX_FACTOR_VARS:
        fac = find_factor(rest[0])
        if fac is None:
            return PrimeResult("prime", "L2")
        if isinstance(fac, tuple) and _check_witness(P, *fac):
            return PrimeResult("not_prime", "L2", fac)

    if P.dim() == 0:
        wit, exhaustive = _finite_ring_zero_divisor(P, FINITE_RING_CAP)
        if wit is not None and _check_witness(P, *wit):
            return PrimeResult("not_prime", "L3", wit)
        if exhaustive:
            return PrimeResult("prime", "L3")

    return PrimeResult("undecided", "L4")
