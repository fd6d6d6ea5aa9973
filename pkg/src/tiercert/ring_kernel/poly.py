"""Sparse multivariate polynomials with a fixed monomial order."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ..errors import UsageError
from .field import PrimeField, RationalField


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


def _lex_key(m):
    return tuple(m)


class MonomialOrder:
    """A monomial order given by an integer sort key (larger key, larger monomial).

    ``spec`` is ``"grevlex"``, ``"lex"`` or ``"elim<k>:<base>"``; the last one
    compares the first ``k`` variables by total degree-then-grevlex before
    consulting ``base`` on the rest, which eliminates those variables.
    """

    def __init__(self, spec: str):
        self.spec = spec
        if spec == "grevlex":
            self._key = _grevlex_key
        elif spec == "lex":
            self._key = _lex_key
        elif spec.startswith("elim"):
            head, _, base = spec.partition(":")
            k = int(head[4:])
            base_key = MonomialOrder(base)._key
            self._key = lambda m, k=k, b=base_key: _grevlex_key(m[:k]) + b(m[k:])
        else:
            raise UsageError(f"unknown monomial order {spec!r}")
        self._cache: dict = {}

    def key(self, m):
        try:
            return self._cache[m]
        except KeyError:
            k = self._cache[m] = self._key(m)
            return k

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return self.spec


class PolyRing:
    """k[x_1..x_n] with a fixed monomial order."""

    def __init__(self, variables: Iterable[str], field=None, order: str = "grevlex"):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise UsageError(f"duplicate variables in {self.vars}")
        self.field = field if field is not None else PrimeField(5)
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
        self.nvars = len(self.vars)
        self.one_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.vars == other.vars
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.vars, self.field, self.order))

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.vars)}]<{self.order.spec}>"

    # constructors
    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = self.field.norm(c)
        return Poly(self, {self.one_mono: c} if c else {})

    def var(self, name_or_index) -> Poly:
        i = self.vars.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): self.field.norm(1)})

    def gens(self) -> list[Poly]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m, c=1) -> Poly:
        c = self.field.norm(c)
        return Poly(self, {tuple(m): c} if c else {})

    def from_terms(self, terms: dict) -> Poly:
        f = self.field
        return Poly(self, {m: f.norm(c) for m, c in terms.items() if f.norm(c)})

    def parse(self, text: str) -> Poly:
        from .parse import parse_poly

        return parse_poly(text, self)

    def __call__(self, x) -> Poly:
        if isinstance(x, Poly):
            if x.ring != self:
                raise UsageError(f"polynomial over {x.ring} used in {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def with_order(self, order: str) -> PolyRing:
        return PolyRing(self.vars, self.field, order)

    def extend(self, new_vars: Iterable[str], order: str | None = None) -> PolyRing:
        """Ring with ``new_vars`` prepended (default order eliminates them)."""
        new_vars = tuple(new_vars)
        if order is None:
            order = f"elim{len(new_vars)}:{self.order.spec}"
        return PolyRing(new_vars + self.vars, self.field, order)

    def sort_terms(self, monos):
        return sorted(monos, key=self.order.key, reverse=True)


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # coercion
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise UsageError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = f.norm(t.get(m, 0) + c)
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {m: f.norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return Poly(self.ring, {m: v for m, c in t.items() if (v := f.norm(c))})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Poly:
        f = self.ring.field
        c = f.norm(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: f.norm(v * c) for m, v in self.terms.items()})

    def mul_monomial(self, mono, c=1) -> Poly:
        f = self.ring.field
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): f.norm(v * c) for m, v in self.terms.items()},
        )

    # comparisons
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one_mono in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring.one_mono, 0)

    def is_unit_constant(self) -> bool:
        return self.is_constant() and bool(self.terms)

    # leading data
    def sorted_monomials(self):
        return self.ring.sort_terms(self.terms)

    def lm(self):
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order.key)

    def lc(self):
        return self.terms[self.lm()]

    def monic(self) -> Poly:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def weighted_degree(self, weights) -> int:
        return max((sum(w * e for w, e in zip(weights, m)) for m in self.terms), default=-1)

    def is_homogeneous(self, weights=None) -> bool:
        weights = weights or (1,) * self.ring.nvars
        degs = {sum(w * e for w, e in zip(weights, m)) for m in self.terms}
        return len(degs) <= 1

    def support_vars(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def diff(self, i: int) -> Poly:
        f = self.ring.field
        t = {}
        for m, c in self.terms.items():
            if m[i]:
                v = f.norm(c * m[i])
                if v:
                    mm = list(m)
                    mm[i] -= 1
                    t[tuple(mm)] = v
        return Poly(self.ring, t)

    def evaluate(self, point) -> object:
        f = self.ring.field
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total += v
        return f.norm(total)

    def embed(self, ring: PolyRing, offset: int | None = None) -> Poly:
        """Image in a ring whose variables extend ours (matched by name)."""
        idx = [ring.vars.index(v) for v in self.ring.vars]
        t = {}
        for m, c in self.terms.items():
            mm = [0] * ring.nvars
            for i, e in zip(idx, m):
                mm[i] = e
            t[tuple(mm)] = c
        return Poly(ring, t)

    def restrict(self, ring: PolyRing) -> Poly:
        """Image in a ring whose variables are a subset; fails if others occur."""
        idx = [self.ring.vars.index(v) for v in ring.vars]
        keep = set(idx)
        t = {}
        for m, c in self.terms.items():
            if any(e and i not in keep for i, e in enumerate(m)):
                raise UsageError(f"{self} involves variables outside {ring.vars}")
            t[tuple(m[i] for i in idx)] = c
        return Poly(ring, t)

    # printing
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_monomial(m, names) -> str:
    parts = []
    for v, e in zip(names, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    field = f.ring.field
    out = []
    for m in f.sorted_monomials():
        c = field.signed(f.terms[m])
        neg = c < 0
        c = -c if neg else c
        mono = format_monomial(m, f.ring.vars)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)
