"""Buchberger's algorithm for submodules of free modules S^r.

Vectors are dicts ``{(component, exponent_tuple): coeff}``; an ideal is the
rank-1 case with every component 0. Terms are compared position-over-term
with component 0 largest, so a Gröbner basis eliminates leading components:
the elements whose support avoids components ``< r`` generate the
intersection with the trailing summand.

Pair handling: normal selection strategy (smallest lcm first), Buchberger's
coprime criterion for single-component elements, and the chain criterion.
"""

from __future__ import annotations

import heapq


from ..errors import Cancelled


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class Engine:
    """Term order plus field arithmetic for one polynomial ring."""

    def __init__(self, ring):
        self.ring = ring
        self.field = ring.field
        self.p = ring.field.p
        self._mkey = ring.order.key
        self._key: dict = {}
        self._neg: dict = {}

    def key(self, term):
        try:
            return self._key[term]
        except KeyError:
            k = self._key[term] = (-term[0],) + self._mkey(term[1])
            return k

    def negkey(self, term):
        try:
            return self._neg[term]
        except KeyError:
            k = self._neg[term] = tuple(-x for x in self.key(term))
            return k

    def lead(self, v):
        return max(v, key=self.key)

    def monic(self, v):
        if not v:
            return v
        lt = self.lead(v)
        c = v[lt]
        if c == 1:
            return v
        inv = self.field.inv(c)
        p = self.p
        if p:
            return {t: (a * inv) % p for t, a in v.items()}
        return {t: a * inv for t, a in v.items()}

    def sort_terms(self, v):
        return sorted(v, key=self.key, reverse=True)

    def scale_shift(self, v, mono, c):
        p = self.p
        out = {}
        for (comp, m), a in v.items():
            b = (a * c) % p if p else a * c
            if b:
                out[(comp, tuple(x + y for x, y in zip(m, mono)))] = b
        return out

    def add_into(self, acc, v, mono=None, c=1):
        """acc += c * mono * v (in place)."""
        p = self.p
        for (comp, m), a in v.items():
            t = (comp, m if mono is None else tuple(x + y for x, y in zip(m, mono)))
            b = acc.get(t, 0) + a * c
            if p:
                b %= p
            if b:
                acc[t] = b
            else:
                acc.pop(t, None)
        return acc


class Basis:
    """A list of monic vectors with a leading-term index, used for reduction."""

    def __init__(self, engine: Engine, vecs=()):
        self.engine = engine
        self.vecs: list = []
        self.lts: list = []
        self._by_comp: dict = {}
        for v in vecs:
            self.append(v)

    def append(self, v):
        lt = self.engine.lead(v)
        self.vecs.append(v)
        self.lts.append(lt)
        self._by_comp.setdefault(lt[0], []).append((lt[1], v))

    def __len__(self):
        return len(self.vecs)

    def find_divisor(self, term):
        for m, v in self._by_comp.get(term[0], ()):
            if _divides(m, term[1]):
                return m, v
        return None

    def reduce(self, v, full: bool = True):
        """Normal form of ``v``; with ``full=False`` stops at the first irreducible term."""
        eng = self.engine
        p = eng.p
        negkey = eng.negkey
        v = dict(v)
        rem: dict = {}
        heap = [(negkey(t), t) for t in v]
        heapq.heapify(heap)
        while heap:
            _, t = heapq.heappop(heap)
            c = v.get(t)
            if c is None:
                continue
            hit = self.find_divisor(t)
            if hit is None:
                if not full:
                    v.update(rem)
                    return v
                rem[t] = c
                del v[t]
                continue
            gm, g = hit
            q = _sub(t[1], gm)
            for (gc, m2), a in g.items():
                nt = (gc, tuple(x + y for x, y in zip(m2, q)))
                old = v.get(nt)
                nv = (0 if old is None else old) - c * a
                if p:
                    nv %= p
                if nv:
                    if old is None:
                        heapq.heappush(heap, (negkey(nt), nt))
                    v[nt] = nv
                elif old is not None:
                    del v[nt]
        return rem

    def contains(self, v) -> bool:
        return not self.reduce(v)


def _single_comp(v) -> bool:
    comps = {t[0] for t in v}
    return len(comps) <= 1


def groebner_basis(engine: Engine, gens, cancel=None) -> list:
    """Reduced Gröbner basis (monic vectors, sorted by decreasing leading term)."""
    G = Basis(engine)
    single: list = []
    heap: list = []
    pending: set = set()
    counter = 0

    def add(h):
        nonlocal counter
        h = engine.monic(h)
        idx = len(G)
        G.append(h)
        single.append(_single_comp(h))
        comp, m = G.lts[idx]
        for k in range(idx):
            ck, mk = G.lts[k]
            if ck != comp:
                continue
            if single[k] and single[idx] and _coprime(mk, m):
                continue
            L = _lcm(mk, m)
            counter += 1
            heapq.heappush(heap, (engine.key((comp, L)), counter, k, idx))
            pending.add((k, idx))

    for f in gens:
        if f:
            r = G.reduce(f) if len(G) else dict(f)
            if r:
                add(r)

    while heap:
        if cancel is not None and cancel.is_set():
            raise Cancelled("Gröbner basis computation cancelled")
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        comp, mi = G.lts[i]
        mj = G.lts[j][1]
        L = _lcm(mi, mj)
        if _chain_skip(G, pending, i, j, comp, L):
            continue
        s = engine.scale_shift(G.vecs[i], _sub(L, mi), 1)
        engine.add_into(s, G.vecs[j], _sub(L, mj), -1)
        h = G.reduce(s)
        if h:
            add(h)

    return _reduce_basis(engine, G)


def _chain_skip(G: Basis, pending, i, j, comp, L) -> bool:
    for k, (ck, mk) in enumerate(G.lts):
        if k == i or k == j or ck != comp:
            continue
        if not _divides(mk, L):
            continue
        a = (i, k) if i < k else (k, i)
        b = (j, k) if j < k else (k, j)
        if a not in pending and b not in pending:
            return True
    return False


def _reduce_basis(engine: Engine, G: Basis) -> list:
    items = list(zip(G.lts, G.vecs))
    keep = []
    for idx, (lt, v) in enumerate(items):
        redundant = False
        for jdx, (lt2, _) in enumerate(items):
            if jdx == idx or lt2[0] != lt[0] or not _divides(lt2[1], lt[1]):
                continue
            # equal leading terms: keep the earliest copy
            if lt2[1] != lt[1] or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(v)
    out = []
    for idx, v in enumerate(keep):
        others = Basis(engine, keep[:idx] + keep[idx + 1 :])
        out.append(engine.monic(others.reduce(v)))
    out.sort(key=lambda v: engine.key(engine.lead(v)), reverse=True)
    return out
