"""Koszul complexes, their homology, and depth via Koszul homology."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import UsageError
from .module_kernel import Matrix, ModuleMap, PresentedModule, block_diag, homology
from .ring_kernel import QuotientRing

INFINITE_DEPTH = math.inf


def exterior_basis(h: int, i: int) -> list[tuple]:
    """Subsets of {0..h-1} of size i in lexicographic order."""
    return list(itertools.combinations(range(h), i))


def koszul_matrix(R: QuotientRing, xs, i: int) -> Matrix:
    """d_i: K_i -> K_{i-1}, e_S -> sum_j (-1)^pos(j,S) x_j e_{S - j}."""
    h = len(xs)
    src = exterior_basis(h, i)
    tgt = exterior_basis(h, i - 1)
    index = {s: k for k, s in enumerate(tgt)}
    z = R.zero()
    cols = []
    for S in src:
        col = [z] * len(tgt)
        for pos, j in enumerate(S):
            rest = S[:pos] + S[pos + 1 :]
            term = xs[j] if pos % 2 == 0 else -xs[j]
            col[index[rest]] = col[index[rest]] + term
        cols.append(col)
    return Matrix(R, len(tgt), len(src), cols)


@dataclass
class KoszulComplex:
    ring: QuotientRing
    elements: list
    differentials: list = field(default_factory=list)  # differentials[i-1] = d_i

    @property
    def length(self) -> int:
        return len(self.elements)

    def d(self, i: int) -> Matrix:
        return self.differentials[i - 1]

    def rank(self, i: int) -> int:
        return math.comb(self.length, i)


def koszul_complex(R: QuotientRing, xs) -> KoszulComplex:
    xs = [R(x) for x in xs]
    if not xs:
        raise UsageError("Koszul complex needs at least one element")
    ds = [koszul_matrix(R, xs, i) for i in range(1, len(xs) + 1)]
    for i in range(len(ds) - 1):
        if not (ds[i] * ds[i + 1]).is_zero():
            raise AssertionError("Koszul differentials do not compose to zero")
    return KoszulComplex(R, xs, ds)


def _tensor(K: KoszulComplex, M: PresentedModule | None, i: int):
    """The map d_i ⊗ M between direct sums of copies of M (None: M = R)."""
    R = K.ring
    h = K.length
    if M is None:
        M = PresentedModule.free(R, 1)
    r = M.ngens

    def obj(j):
        n = math.comb(h, j) if 0 <= j <= h else 0
        if n == 0:
            return PresentedModule.zero(R)
        return PresentedModule(R, block_diag(R, *([M.presentation] * n)))

    # generators of K_j ⊗ M are ordered (basis subset, generator of M)
    def map_(j):
        src, tgt = obj(j), obj(j - 1)
        if j < 1 or j > h:
            return ModuleMap.zero(src, tgt)
        d = K.d(j)
        cols = []
        for s in range(d.ncols):
            for g in range(r):
                col = [R.zero()] * (d.nrows * r)
                for t in range(d.nrows):
                    col[t * r + g] = d.entry(t, s)
                cols.append(col)
        return ModuleMap(src, tgt, Matrix(R, d.nrows * r, d.ncols * r, cols))

    return map_(i + 1), map_(i)


def koszul_homology(K: KoszulComplex, i: int, M: PresentedModule | None = None) -> PresentedModule:
    """H_i(K ⊗ M) = ker d_i / im d_{i+1} as a presented subquotient."""
    if i < 0 or i > K.length:
        raise UsageError(f"Koszul homology index {i} outside 0..{K.length}")
    f, g = _tensor(K, M, i)
    return homology(f, g).module


def depth(M: PresentedModule, ideal_gens) -> float:
    """h - max{i : H_i(K(gens) ⊗ M) != 0}; infinite for the zero module."""
    R = M.ring
    if M.is_zero():
        return INFINITE_DEPTH
    K = koszul_complex(R, ideal_gens)
    for i in range(K.length, -1, -1):
        if not koszul_homology(K, i, M).is_zero():
            return K.length - i
    # H_0 = M/IM = 0 means I M = M; the depth along I is infinite
    return INFINITE_DEPTH


def ring_depth(R: QuotientRing) -> float:
    return depth(PresentedModule.free(R, 1), R.gens())
