"""Matrices over a quotient ring, stored column by column."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import UsageError
from ..ring_kernel import Basis, Poly, QuotientRing, engine_for, groebner_basis


def col_to_vec(col: Sequence[Poly], offset: int = 0) -> dict:
    v = {}
    for i, f in enumerate(col):
        for m, c in f.terms.items():
            v[(i + offset, m)] = c
    return v


def vec_to_col(ring: QuotientRing, v: dict, rank: int, offset: int = 0) -> tuple:
    buckets: list = [dict() for _ in range(rank)]
    for (comp, m), c in v.items():
        buckets[comp - offset][m] = c
    S = ring.ambient
    return tuple(ring.reduce(S.from_terms(b)) if b else S.zero() for b in buckets)


class Matrix:
    """An ``nrows x ncols`` matrix with entries in normal form modulo the ring."""

    __slots__ = ("ring", "nrows", "ncols", "cols", "_key")

    def __init__(self, ring: QuotientRing, nrows: int, ncols: int, cols: Iterable[Sequence] = ()):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        cols = [tuple(ring(x) for x in c) for c in cols]
        if len(cols) != ncols or any(len(c) != nrows for c in cols):
            raise UsageError(f"matrix data does not match shape {nrows}x{ncols}")
        self.cols = tuple(cols)
        self._key = None

    # constructors
    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise UsageError("ragged matrix rows")
        cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
        return cls(ring, nrows, ncols, cols)

    @classmethod
    def from_cols(cls, ring, cols: Sequence[Sequence], nrows: int) -> Matrix:
        return cls(ring, nrows, len(cols), cols)

    @classmethod
    def zero(cls, ring, nrows: int, ncols: int) -> Matrix:
        z = ring.zero()
        return cls(ring, nrows, ncols, [[z] * nrows for _ in range(ncols)])

    @classmethod
    def identity(cls, ring, n: int) -> Matrix:
        one, z = ring.one(), ring.zero()
        return cls(ring, n, n, [[one if i == j else z for i in range(n)] for j in range(n)])

    # access
    def entry(self, i: int, j: int) -> Poly:
        return self.cols[j][i]

    def rows(self) -> list[list[Poly]]:
        return [[self.cols[j][i] for j in range(self.ncols)] for i in range(self.nrows)]

    def row(self, i: int) -> list[Poly]:
        return [c[i] for c in self.cols]

    def key(self):
        if self._key is None:
            self._key = (
                self.nrows,
                self.ncols,
                tuple(tuple(tuple(sorted(f.terms.items())) for f in c) for c in self.cols),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return all(not f for c in self.cols for f in c)

    # algebra
    def __mul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise UsageError(f"shape mismatch {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}")
        S = self.ring.ambient
        out = []
        for c in other.cols:
            acc = [S.zero()] * self.nrows
            for k, f in enumerate(c):
                if not f:
                    continue
                for i, a in enumerate(self.cols[k]):
                    if a:
                        acc[i] = acc[i] + a * f
            out.append(acc)
        return Matrix(self.ring, self.nrows, other.ncols, out)

    def apply(self, col: Sequence[Poly]) -> tuple:
        return (self * Matrix(self.ring, self.ncols, 1, [col])).cols[0]

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            self.ring,
            self.nrows,
            self.ncols,
            [[a + b for a, b in zip(c1, c2)] for c1, c2 in zip(self.cols, other.cols)],
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.ring, self.nrows, self.ncols, [[-a for a in c] for c in self.cols])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, f) -> Matrix:
        f = self.ring(f)
        return Matrix(self.ring, self.nrows, self.ncols, [[a * f for a in c] for c in self.cols])

    def _same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise UsageError("shape mismatch")

    def transpose(self) -> Matrix:
        return Matrix(self.ring, self.ncols, self.nrows, [self.row(i) for i in range(self.nrows)])

    def hstack(self, *others: Matrix) -> Matrix:
        cols = list(self.cols)
        for o in others:
            if o.nrows != self.nrows:
                raise UsageError("hstack row mismatch")
            cols.extend(o.cols)
        return Matrix(self.ring, self.nrows, len(cols), cols)

    def vstack(self, *others: Matrix) -> Matrix:
        mats = (self,) + others
        if any(m.ncols != self.ncols for m in mats):
            raise UsageError("vstack column mismatch")
        nrows = sum(m.nrows for m in mats)
        cols = [sum((m.cols[j] for m in mats), ()) for j in range(self.ncols)]
        return Matrix(self.ring, nrows, self.ncols, cols)

    def select_rows(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.ring, len(idx), self.ncols, [[c[i] for i in idx] for c in self.cols])

    def select_cols(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.ring, self.nrows, len(idx), [self.cols[j] for j in idx])

    def kron_identity(self, n: int) -> Matrix:
        """self ⊗ I_n with block (i, j) equal to self[i][j] * I_n."""
        z = self.ring.zero()
        cols = []
        for j in range(self.ncols):
            for b in range(n):
                col = [z] * (self.nrows * n)
                for i in range(self.nrows):
                    col[i * n + b] = self.cols[j][i]
                cols.append(col)
        return Matrix(self.ring, self.nrows * n, self.ncols * n, cols)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {[[str(e) for e in r] for r in self.rows()]})"


def block_diag(ring, *mats: Matrix) -> Matrix:
    nrows = sum(m.nrows for m in mats)
    z = ring.zero()
    cols = []
    r0 = 0
    for m in mats:
        for c in m.cols:
            col = [z] * nrows
            col[r0 : r0 + m.nrows] = c
            cols.append(col)
        r0 += m.nrows
    return Matrix(ring, nrows, len(cols), cols)


class Submodule:
    """Submodule of R^rank generated by columns, with normal forms, lifts and syzygies.

    Computations run in S^rank on the generators plus J·e_i.
    """

    def __init__(self, ring: QuotientRing, rank: int, gens: Iterable[Sequence[Poly]], cancel=None):
        self.ring = ring
        self.rank = rank
        self.gens = [tuple(ring(x) for x in g) for g in gens]
        self.cancel = cancel
        self._basis: Basis | None = None
        self._tracking: Basis | None = None

    def _relation_vecs(self, rank):
        rel = self.ring.relations_gb()
        return [{(i, m): c for m, c in r.terms.items()} for i in range(rank) for r in rel]

    @property
    def engine(self):
        return engine_for(self.ring.ambient)

    def basis(self) -> Basis:
        if self._basis is None:
            vecs = [col_to_vec(g) for g in self.gens] + self._relation_vecs(self.rank)
            gb = groebner_basis(self.engine, [v for v in vecs if v], cancel=self.cancel)
            self._basis = Basis(self.engine, gb)
        return self._basis

    def reduce(self, col: Sequence[Poly]) -> tuple:
        v = self.basis().reduce(col_to_vec(col))
        return vec_to_col(self.ring, v, self.rank)

    def contains(self, col: Sequence[Poly]) -> bool:
        return not self.basis().reduce(col_to_vec(col))

    def contains_all(self, cols) -> bool:
        return all(self.contains(c) for c in cols)

    def _tracking_basis(self) -> Basis:
        if self._tracking is None:
            r = self.rank
            vecs = []
            one = self.ring.field.norm(1)
            zero_mono = self.ring.ambient.one_mono
            for j, g in enumerate(self.gens):
                v = col_to_vec(g)
                v[(r + j, zero_mono)] = one
                vecs.append(v)
            vecs += self._relation_vecs(r)
            self._tracking = Basis(self.engine, groebner_basis(self.engine, vecs, cancel=self.cancel))
        return self._tracking

    def lift(self, col: Sequence[Poly]):
        """Coefficients c with col = sum c_j gens_j in R^rank, or None if col is outside."""
        rem = self._tracking_basis().reduce(col_to_vec(col))
        if any(comp < self.rank for comp, _ in rem):
            return None
        field = self.ring.field
        neg = {t: field.norm(-c) for t, c in rem.items()}
        return vec_to_col(self.ring, neg, len(self.gens), offset=self.rank)

    def syzygies(self) -> list[tuple]:
        """Generators of {c : sum c_j gens_j = 0 in R^rank} (zero columns dropped)."""
        r = self.rank
        out = []
        seen = set()
        for v in self._tracking_basis().vecs:
            if any(comp < r for comp, _ in v):
                continue
            col = vec_to_col(self.ring, v, len(self.gens), offset=r)
            if any(col):
                k = tuple(tuple(sorted(f.terms.items())) for f in col)
                if k not in seen:
                    seen.add(k)
                    out.append(col)
        return out


def syzygies(A: Matrix, cancel=None) -> Matrix:
    """Matrix whose columns generate {v : A v = 0} over the ring of A."""
    sub = Submodule(A.ring, A.nrows, A.cols, cancel=cancel)
    cols = sub.syzygies()
    return Matrix(A.ring, A.ncols, len(cols), cols)
