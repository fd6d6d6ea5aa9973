"""Ideals in polynomial rings and their quotients.

Every ring used above this layer is a :class:`QuotientRing` ``S/J`` (a
polynomial ring is ``S/(0)``). An ideal of ``R = S/J`` is stored through its
preimage ``I + J`` in ``S``; its reduced Gröbner basis there is the canonical
form.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ..errors import NotEquidimensional, UsageError
from .groebner import Basis, Engine, groebner_basis
from .poly import Poly, PolyRing

_ENGINES: dict = {}


def engine_for(ring: PolyRing) -> Engine:
    eng = _ENGINES.get(ring)
    if eng is None:
        eng = _ENGINES[ring] = Engine(ring)
    return eng


def poly_to_vec(f: Poly, comp: int = 0) -> dict:
    return {(comp, m): c for m, c in f.terms.items()}


def vec_to_poly(ring: PolyRing, v: dict) -> Poly:
    return Poly(ring, {m: c for (_, m), c in v.items()})


def groebner_polys(ring: PolyRing, gens: Iterable[Poly], cancel=None) -> list[Poly]:
    eng = engine_for(ring)
    vecs = [poly_to_vec(g) for g in gens if g]
    return [vec_to_poly(ring, v) for v in groebner_basis(eng, vecs, cancel=cancel)]


def divide_exact(f: Poly, g: Poly) -> Poly | None:
    """Quotient f/g when g divides f, else None."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    ring = f.ring
    eng = engine_for(ring)
    field = ring.field
    gv = poly_to_vec(g.monic())
    inv = field.inv(g.lc())
    basis = Basis(eng, [gv])
    lt_g = basis.lts[0][1]
    rem = dict(poly_to_vec(f))
    quot: dict = {}
    while rem:
        t = eng.lead(rem)
        if not all(a <= b for a, b in zip(lt_g, t[1])):
            return None
        q = tuple(b - a for a, b in zip(lt_g, t[1]))
        c = rem[t]
        quot[q] = field.norm(quot.get(q, 0) + c * inv)
        eng.add_into(rem, gv, q, -c)
    return ring.from_terms(quot)


class Ideal:
    """An ideal of a :class:`QuotientRing` with a lazily computed Gröbner basis."""

    def __init__(self, ring: QuotientRing, gens: Iterable = (), note: str | None = None):
        if isinstance(ring, PolyRing):
            ring = QuotientRing(ring)
        self.ring = ring
        self.gens = tuple(ring.reduce(ring.ambient(g)) for g in gens)
        self.note = note
        self._gb: list | None = None
        self._basis: Basis | None = None

    # Gröbner data of the preimage in the ambient ring
    def groebner(self) -> list[Poly]:
        if self._gb is None:
            pre = list(self.gens) + list(self.ring.relations_gb())
            self._gb = groebner_polys(self.ring.ambient, pre)
        return self._gb

    def _reducer(self) -> Basis:
        if self._basis is None:
            eng = engine_for(self.ring.ambient)
            self._basis = Basis(eng, [poly_to_vec(g) for g in self.groebner()])
        return self._basis

    def normal_form(self, f) -> Poly:
        f = self.ring.ambient(f)
        return vec_to_poly(self.ring.ambient, self._reducer().reduce(poly_to_vec(f)))

    def contains(self, f) -> bool:
        return not self.normal_form(f)

    def __contains__(self, f):
        return self.contains(f)

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return all(not g for g in self.gens)

    def generators(self) -> list[Poly]:
        """Canonical generators in R: normal forms mod J of the preimage basis."""
        out = []
        for g in self.groebner():
            r = self.ring.reduce(g)
            if r:
                out.append(r)
        return out

    def canonical(self) -> Ideal:
        return Ideal(self.ring, self.generators())

    def key(self):
        return tuple(tuple(sorted(g.terms.items())) for g in self.groebner())

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def __mul__(self, other: Ideal):
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators()) + ")"

    def __repr__(self):
        return f"Ideal{self}"

    # derived invariants
    def dim(self) -> int:
        """Krull dimension of R/I."""
        return krull_dim_from_gb(self.ring.ambient, self.groebner())

    def standard_monomials(self, limit: int = 100000) -> list | None:
        """Basis of S/(I+J) when it is finite dimensional, else None."""
        if self.dim() > 0:
            return None
        if self.is_unit():
            return []
        lts = [g.lm() for g in self.groebner()]
        n = self.ring.ambient.nvars
        out = []
        frontier = [(0,) * n]
        seen = set(frontier)
        while frontier:
            m = frontier.pop()
            if any(all(a <= b for a, b in zip(l, m)) for l in lts):
                continue
            out.append(m)
            if len(out) > limit:
                return None
            for i in range(n):
                mm = list(m)
                mm[i] += 1
                mm = tuple(mm)
                if mm not in seen:
                    seen.add(mm)
                    frontier.append(mm)
        return sorted(out, key=self.ring.ambient.order.key, reverse=True)


def krull_dim_from_gb(ring: PolyRing, gb: Sequence[Poly]) -> int:
    """Dimension of S/(gb): largest variable set no leading monomial lives on."""
    if not gb:
        return ring.nvars
    if len(gb) == 1 and gb[0].is_constant():
        return -1
    supports = [frozenset(i for i, e in enumerate(g.lm()) if e) for g in gb]
    n = ring.nvars
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return size
    return 0


class QuotientRing:
    """R = k[x]/J with normal forms taken modulo the reduced Gröbner basis of J."""

    def __init__(
        self,
        ambient: PolyRing,
        relations: Iterable = (),
        name: str | None = None,
        equidimensional: bool | None = None,
    ):
        self.ambient = ambient
        self.relations = tuple(ambient(r) for r in relations)
        self.name = name
        self._gb = groebner_polys(ambient, self.relations)
        if len(self._gb) == 1 and self._gb[0].is_constant():
            raise UsageError("defining ideal is the unit ideal")
        eng = engine_for(ambient)
        self._basis = Basis(eng, [poly_to_vec(g) for g in self._gb])
        self._equidim_flag = equidimensional
        self._dim: int | None = None
        self._equidim: bool | None = None

    @classmethod
    def polynomial(cls, variables, field=None, order="grevlex", name=None) -> QuotientRing:
        return cls(PolyRing(variables, field, order), (), name=name)

    # structural identity
    def key(self):
        return (self.ambient, tuple(tuple(sorted(g.terms.items())) for g in self._gb))

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def vars(self):
        return self.ambient.vars

    @property
    def field(self):
        return self.ambient.field

    @property
    def nvars(self):
        return self.ambient.nvars

    def relations_gb(self) -> list[Poly]:
        return self._gb

    def is_polynomial_ring(self) -> bool:
        return not self._gb

    def reduce(self, f) -> Poly:
        f = self.ambient(f)
        if not self._gb or not f:
            return f
        return vec_to_poly(self.ambient, self._basis.reduce(poly_to_vec(f)))

    def __call__(self, x) -> Poly:
        return self.reduce(self.ambient(x))

    def var(self, name) -> Poly:
        return self.reduce(self.ambient.var(name))

    def gens(self) -> list[Poly]:
        return [self.var(v) for v in self.vars]

    def zero(self):
        return self.ambient.zero()

    def one(self):
        return self.ambient.one()

    def ideal(self, gens: Iterable = ()) -> Ideal:
        return Ideal(self, gens)

    def zero_ideal(self) -> Ideal:
        return Ideal(self, ())

    def maximal_ideal(self) -> Ideal:
        """The irrelevant ideal generated by all variables."""
        return Ideal(self, self.ambient.gens())

    @property
    def dim(self) -> int:
        if self._dim is None:
            self._dim = krull_dim_from_gb(self.ambient, self._gb)
        return self._dim

    def defining_ideal(self) -> Ideal:
        return Ideal(QuotientRing(self.ambient), self.relations)

    def is_equidimensional(self) -> bool | None:
        """True when decidable from the presentation or declared; None if unknown."""
        if self._equidim is None:
            self._equidim = self._decide_equidim()
        return self._equidim

    def _decide_equidim(self):
        if self._equidim_flag is not None:
            return self._equidim_flag
        gb = self._gb
        if len(gb) <= 1:
            return True  # S or a hypersurface: principal ideals are unmixed
        if all(g.degree() == 1 for g in gb):
            return True
        from .primality import is_prime

        res = is_prime(self.defining_ideal())
        return True if res.is_prime else None

    def require_equidimensional(self, what: str):
        if not self.is_equidimensional():
            raise NotEquidimensional(
                f"{what}: cannot certify that {self} is equidimensional; "
                "declare it with equidimensional=True if known"
            )

    def __str__(self):
        if self.name:
            return self.name
        base = f"{self.field.name}[{','.join(self.vars)}]"
        if self._gb:
            base += "/(" + ", ".join(str(r) for r in self.relations) + ")"
        return base

    def __repr__(self):
        return f"QuotientRing({self})"


# ---------------------------------------------------------------- operations


def _check_same(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise UsageError(f"ideals live in different rings: {I.ring} vs {J.ring}")


def normal_form(f, I: Ideal) -> Poly:
    if isinstance(f, Poly) and f.ring != I.ring.ambient:
        raise UsageError(f"polynomial over {f.ring} reduced modulo an ideal of {I.ring}")
    return I.normal_form(f)


def groebner_basis_of(I: Ideal) -> list[Poly]:
    return I.groebner()


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t·I + (1-t)·J."""
    _check_same(I, J)
    R = I.ring
    S = R.ambient
    T = S.extend(["_t"])
    t = T.var("_t")
    gens = [t * g.embed(T) for g in I.groebner()] + [(1 - t) * g.embed(T) for g in J.groebner()]
    gb = groebner_polys(T, gens)
    out = [g.restrict(S) for g in gb if not g.lm()[0]]
    return Ideal(R, out)


def ideal_quotient(I: Ideal, a) -> Ideal:
    """(I : a) = {r : r a ∈ I}; ``a`` a polynomial or an ideal (intersection over gens)."""
    R = I.ring
    if isinstance(a, Ideal):
        _check_same(I, a)
        result = Ideal(R, [R.one()])
        for g in a.gens:
            result = ideal_intersect(result, ideal_quotient(I, g))
        return result
    a = R(a)
    if not a:
        return Ideal(R, [R.one()], note="colon by zero: (I:0) = R by convention")
    if I.contains(a):
        return Ideal(R, [R.one()])
    # preimage: (P : a) = (P ∩ (a)) / a in the ambient ring
    S = R.ambient
    P = Ideal(QuotientRing(S), I.groebner())
    A = Ideal(QuotientRing(S), [a])
    inter = ideal_intersect(P, A)
    quot = []
    for g in inter.groebner():
        q = divide_exact(g, a)
        if q is None:
            raise AssertionError("intersection with (a) not divisible by a")
        quot.append(q)
    return Ideal(R, quot)


def radical_membership(f, I: Ideal) -> bool:
    """f ∈ √I iff 1 ∈ I + (1 - t f) in one more variable."""
    R = I.ring
    f = R(f)
    if not f:
        return True
    S = R.ambient
    T = S.extend(["_t"], order="grevlex")
    t = T.var("_t")
    gens = [g.embed(T) for g in I.groebner()] + [1 - t * f.embed(T)]
    gb = groebner_polys(T, gens)
    return len(gb) == 1 and gb[0].is_constant()


def krull_dim(I: Ideal) -> int:
    return I.dim()


def height(p: Ideal, R: QuotientRing | None = None) -> int:
    """ht p = dim R - dim R/p (equidimensional rings only)."""
    R = R or p.ring
    if p.ring != R:
        raise UsageError("ideal not in the given ring")
    R.require_equidimensional("height")
    if p.is_unit():
        raise UsageError("height of the unit ideal is undefined")
    return R.dim - p.dim()
