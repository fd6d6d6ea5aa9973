"""Brute-force linear algebra over F_p for checking ideal operations.

Homogeneous ideals are compared one graded piece at a time: the degree-d
part of (g_1..g_k) is spanned by the products m·g_i of degree d, so
membership, colon and intersection reduce to finite-dimensional subspace
computations. Nothing here touches the Gröbner engine.
"""

from __future__ import annotations

import itertools
import random


def monomials(nvars: int, d: int) -> list[tuple]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return sorted(out, reverse=True)


def pmul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for a, c in f.items():
        for b, e in g.items():
            m = tuple(x + y for x, y in zip(a, b))
            out[m] = (out.get(m, 0) + c * e) % p
    return {m: c for m, c in out.items() if c}


def degree(f: dict) -> int:
    return max((sum(m) for m in f), default=-1)


def is_homogeneous(f: dict) -> bool:
    return len({sum(m) for m in f}) <= 1


class Space:
    """A subspace of F_p^N kept in reduced row echelon form."""

    def __init__(self, p: int, n: int, rows=()):
        self.p = p
        self.n = n
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for r in rows:
            self.add(r)

    def reduce(self, v):
        v = [x % self.p for x in v]
        for r, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = [(a - c * b) % self.p for a, b in zip(v, r)]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = pow(v[piv], self.p - 2, self.p)
        v = [(x * inv) % self.p for x in v]
        new_rows = []
        for r in self.rows:
            c = r[piv]
            new_rows.append([(a - c * b) % self.p for a, b in zip(r, v)] if c else r)
        self.rows = new_rows + [v]
        self.pivots = self.pivots + [piv]
        order = sorted(range(len(self.rows)), key=lambda k: self.pivots[k])
        self.rows = [self.rows[k] for k in order]
        self.pivots = [self.pivots[k] for k in order]
        return True

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return self.dim == other.dim and all(other.contains(r) for r in self.rows)

    def intersect(self, other: "Space") -> "Space":
        # solve a·B1 = b·B2 via the kernel of the stacked system
        B1, B2 = self.rows, other.rows
        k1 = len(B1)
        combos = kernel([r for r in B1] + [[(-x) % self.p for x in r] for r in B2], self.p)
        out = Space(self.p, self.n)
        for c in combos:
            v = [0] * self.n
            for coef, r in zip(c[:k1], B1):
                if coef:
                    v = [(a + coef * b) % self.p for a, b in zip(v, r)]
            out.add(v)
        return out


def kernel(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {c : sum_i c_i rows_i = 0}."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    # augment with identity to track combinations
    aug = [list(r) + [1 if i == j else 0 for j in range(m)] for i, r in enumerate(rows)]
    piv_row = 0
    for col in range(n):
        sel = next((i for i in range(piv_row, m) if aug[i][col] % p), None)
        if sel is None:
            continue
        aug[piv_row], aug[sel] = aug[sel], aug[piv_row]
        inv = pow(aug[piv_row][col], p - 2, p)
        aug[piv_row] = [(x * inv) % p for x in aug[piv_row]]
        for i in range(m):
            if i != piv_row and aug[i][col] % p:
                c = aug[i][col]
                aug[i] = [(a - c * b) % p for a, b in zip(aug[i], aug[piv_row])]
        piv_row += 1
    return [r[n:] for r in aug[piv_row:]]


class GradedOracle:
    """Graded pieces of homogeneous ideals in F_p[x_1..x_n]."""

    def __init__(self, nvars: int, p: int = 5):
        self.n = nvars
        self.p = p
        self._mons: dict = {}

    def basis(self, d: int) -> list[tuple]:
        if d not in self._mons:
            self._mons[d] = monomials(self.n, d)
        return self._mons[d]

    def vec(self, f: dict, d: int) -> list[int]:
        idx = {m: i for i, m in enumerate(self.basis(d))}
        v = [0] * len(idx)
        for m, c in f.items():
            if sum(m) != d:
                raise ValueError("vector of a non-homogeneous element")
            v[idx[m]] = c % self.p
        return v

    def piece(self, gens: list[dict], d: int) -> Space:
        """I_d for I = (gens), gens homogeneous."""
        sp = Space(self.p, len(self.basis(d)))
        for g in gens:
            e = degree(g)
            if e < 0 or e > d:
                continue
            for m in self.basis(d - e):
                sp.add(self.vec(pmul({m: 1}, g, self.p), d))
        return sp

    def member(self, f: dict, gens: list[dict]) -> bool:
        if not f:
            return True
        return self.piece(gens, degree(f)).contains(self.vec(f, degree(f)))

    def colon_piece(self, gens: list[dict], a: dict, d: int) -> Space:
        """(I : a)_d = {f in S_d : f·a in I_{d + deg a}}."""
        e = degree(a)
        target = self.piece(gens, d + e)
        rows = []
        for m in self.basis(d):
            rows.append(target.reduce(self.vec(pmul({m: 1}, a, self.p), d + e)))
        sp = Space(self.p, len(self.basis(d)))
        for c in kernel(rows, self.p):
            sp.add(c)
        return sp

    def intersection_piece(self, g1, g2, d: int) -> Space:
        return self.piece(g1, d).intersect(self.piece(g2, d))


def random_homogeneous(rng: random.Random, nvars: int, d: int, p: int = 5, density: float = 0.6) -> dict:
    f = {}
    for m in monomials(nvars, d):
        if rng.random() < density:
            c = rng.randrange(1, p)
            f[m] = c
    if not f:
        f[monomials(nvars, d)[0]] = 1
    return f


def random_poly(rng: random.Random, nvars: int, d: int, p: int = 5, density: float = 0.4) -> dict:
    f = {}
    for e in range(d + 1):
        for m in monomials(nvars, e):
            if rng.random() < density:
                f[m] = rng.randrange(1, p)
    return f


def padd(f: dict, g: dict, p: int) -> dict:
    out = dict(f)
    for m, c in g.items():
        out[m] = (out.get(m, 0) + c) % p
    return {m: c for m, c in out.items() if c}


def evaluate(f: dict, point, p: int) -> int:
    total = 0
    for m, c in f.items():
        t = c
        for x, e in zip(point, m):
            t = t * pow(x, e, p)
        total += t
    return total % p


def rational_points(gens: list[dict], nvars: int, p: int) -> list[tuple]:
    return [pt for pt in itertools.product(range(p), repeat=nvars) if all(evaluate(g, pt, p) == 0 for g in gens)]
