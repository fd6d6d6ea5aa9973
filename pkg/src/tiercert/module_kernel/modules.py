"""Finitely presented modules, maps between them, and exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..errors import NotGraded, UsageError
from ..ring_kernel import Ideal, QuotientRing, ideal_intersect
from .grading import column_degree, infer_grading, ring_weights
from .matrix import Matrix, Submodule, block_diag


class PresentedModule:
    """coker(presentation): rows index generators, columns index relations."""

    def __init__(self, ring: QuotientRing, presentation: Matrix, grading=None, name: str | None = None):
        if presentation.ring != ring:
            raise UsageError("presentation matrix over a different ring")
        self.ring = ring
        self.presentation = presentation
        self.grading = grading
        self.name = name
        self._relations: Submodule | None = None
        self._zero: bool | None = None

    @property
    def ngens(self) -> int:
        return self.presentation.nrows

    @property
    def nrels(self) -> int:
        return self.presentation.ncols

    # constructors
    @classmethod
    def free(cls, ring, rank: int) -> PresentedModule:
        return cls(ring, Matrix.zero(ring, rank, 0))

    @classmethod
    def zero(cls, ring) -> PresentedModule:
        return cls(ring, Matrix.zero(ring, 0, 0))

    @classmethod
    def cyclic(cls, ring, gens: Sequence) -> PresentedModule:
        """R/(gens), presented by the 1 x k row of generators."""
        gens = [ring(g) for g in gens]
        return cls(ring, Matrix(ring, 1, len(gens), [[g] for g in gens]))

    @classmethod
    def quotient_by(cls, I: Ideal) -> PresentedModule:
        return cls.cyclic(I.ring, I.generators())

    @classmethod
    def from_rows(cls, ring, rows, ncols=None) -> PresentedModule:
        return cls(ring, Matrix.from_rows(ring, rows, ncols))

    # relation submodule
    def relations(self) -> Submodule:
        if self._relations is None:
            self._relations = Submodule(self.ring, self.ngens, self.presentation.cols)
        return self._relations

    def reduce(self, col) -> tuple:
        return self.relations().reduce(col)

    def element_is_zero(self, col) -> bool:
        return self.relations().contains(col)

    def unit_vector(self, i: int) -> tuple:
        one, z = self.ring.one(), self.ring.zero()
        return tuple(one if k == i else z for k in range(self.ngens))

    def is_zero(self) -> bool:
        if self._zero is None:
            self._zero = all(self.element_is_zero(self.unit_vector(i)) for i in range(self.ngens))
        return self._zero

    def key(self):
        return self.presentation.key()

    def __eq__(self, other):
        return isinstance(other, PresentedModule) and self.ring == other.ring and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        rows = ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.presentation.rows())
        return f"coker[{rows}] ({self.ngens} gens)"

    __repr__ = __str__

    def degrees(self):
        """Generator degrees for a graded presentation, else None."""
        if self.grading is not None:
            return self.grading
        g = infer_grading(self.presentation)
        return None if g is None else g[0]


def direct_sum(*mods: PresentedModule) -> PresentedModule:
    ring = mods[0].ring
    return PresentedModule(ring, block_diag(ring, *(m.presentation for m in mods)))


class ModuleMap:
    """A homomorphism given by images of source generators (columns) in target coordinates."""

    def __init__(self, source: PresentedModule, target: PresentedModule, matrix: Matrix):
        if (matrix.nrows, matrix.ncols) != (target.ngens, source.ngens):
            raise UsageError(
                f"map matrix is {matrix.nrows}x{matrix.ncols}, expected {target.ngens}x{source.ngens}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix

    @property
    def ring(self):
        return self.source.ring

    @classmethod
    def identity(cls, M: PresentedModule) -> ModuleMap:
        return cls(M, M, Matrix.identity(M.ring, M.ngens))

    @classmethod
    def zero(cls, M: PresentedModule, N: PresentedModule) -> ModuleMap:
        return cls(M, N, Matrix.zero(M.ring, N.ngens, M.ngens))

    @classmethod
    def from_rows(cls, source, target, rows) -> ModuleMap:
        return cls(source, target, Matrix.from_rows(source.ring, rows, ncols=source.ngens))

    def offending_column(self) -> Optional[int]:
        """Index of a source relation whose image is not a target relation, else None."""
        img = self.matrix * self.source.presentation
        rel = self.target.relations()
        for j, c in enumerate(img.cols):
            if not rel.contains(c):
                return j
        return None

    def is_well_defined(self) -> bool:
        return self.offending_column() is None

    def require_well_defined(self):
        j = self.offending_column()
        if j is not None:
            raise UsageError(f"ill-defined map: image of source relation column {j} is not a target relation")

    def compose(self, inner: ModuleMap) -> ModuleMap:
        """self ∘ inner."""
        if inner.target != self.source:
            raise UsageError("maps are not composable")
        return ModuleMap(inner.source, self.target, self.matrix * inner.matrix)

    def __matmul__(self, inner):
        return self.compose(inner)

    def is_zero(self) -> bool:
        rel = self.target.relations()
        return all(rel.contains(c) for c in self.matrix.cols)

    def equals(self, other: ModuleMap) -> bool:
        """Same homomorphism (columns congruent modulo target relations)."""
        if other.source != self.source or other.target != self.target:
            return False
        rel = self.target.relations()
        return all(rel.contains(tuple(a - b for a, b in zip(c1, c2))) for c1, c2 in zip(self.matrix.cols, other.matrix.cols))

    def is_identity(self) -> bool:
        return self.source == self.target and self.equals(ModuleMap.identity(self.source))

    def reduced(self) -> ModuleMap:
        """Same map with columns in normal form modulo the target relations."""
        rel = self.target.relations()
        cols = [rel.reduce(c) for c in self.matrix.cols]
        return ModuleMap(self.source, self.target, Matrix(self.ring, self.target.ngens, self.source.ngens, cols))

    def __repr__(self):
        return f"ModuleMap({self.source.ngens}->{self.target.ngens}, {self.matrix!r})"


def submodule_presentation(M: PresentedModule, gens: Sequence[tuple]) -> tuple[PresentedModule, ModuleMap]:
    """The submodule of M generated by ``gens`` (vectors in M's coordinates) and its inclusion."""
    R = M.ring
    s = len(gens)
    G = Matrix(R, M.ngens, s, gens)
    if s == 0:
        N = PresentedModule.zero(R)
        return N, ModuleMap(N, M, G)
    big = G.hstack(M.presentation)
    syz = Submodule(R, M.ngens, big.cols).syzygies()
    rel_cols = []
    seen = set()
    for z in syz:
        c = z[:s]
        if any(c):
            k = tuple(tuple(sorted(f.terms.items())) for f in c)
            if k not in seen:
                seen.add(k)
                rel_cols.append(c)
    N = PresentedModule(R, Matrix(R, s, len(rel_cols), rel_cols))
    return N, ModuleMap(N, M, G)


def _dedupe_nonzero(M: PresentedModule, cols):
    rel = M.relations()
    out, seen = [], set()
    for c in cols:
        if rel.contains(c):
            continue
        k = tuple(tuple(sorted(f.terms.items())) for f in c)
        if k not in seen:
            seen.add(k)
            out.append(tuple(c))
    return out


def kernel_generators(f: ModuleMap) -> list[tuple]:
    """Vectors in source coordinates generating ker f (zero elements pruned)."""
    M, N = f.source, f.target
    big = f.matrix.hstack(N.presentation)
    syz = Submodule(f.ring, N.ngens, big.cols).syzygies()
    return _dedupe_nonzero(M, [z[: M.ngens] for z in syz])


def map_kernel(f: ModuleMap) -> tuple[PresentedModule, ModuleMap]:
    """ker f as a presented module with its inclusion into the source."""
    f.require_well_defined()
    return submodule_presentation(f.source, kernel_generators(f))


def image_contains(f: ModuleMap, col) -> bool:
    """Is the target element ``col`` in im f?"""
    sub = Submodule(f.ring, f.target.ngens, list(f.matrix.cols) + list(f.target.presentation.cols))
    return sub.contains(col)


def lift_through(f: ModuleMap, col):
    """Source vector x with f(x) = col in the target, or None."""
    sub = Submodule(f.ring, f.target.ngens, list(f.matrix.cols) + list(f.target.presentation.cols))
    c = sub.lift(col)
    if c is None:
        return None
    return tuple(c[: f.source.ngens])


def lift_map(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    """h with f ∘ h = g, for g: X -> target(f) landing in im f."""
    sub = Submodule(f.ring, f.target.ngens, list(f.matrix.cols) + list(f.target.presentation.cols))
    cols = []
    for c in g.matrix.cols:
        x = sub.lift(c)
        if x is None:
            raise UsageError("map does not factor through the given map")
        cols.append(tuple(x[: f.source.ngens]))
    return ModuleMap(g.source, f.source, Matrix(f.ring, f.source.ngens, g.source.ngens, cols))


@dataclass
class Homology:
    module: PresentedModule
    kernel: PresentedModule
    kernel_inclusion: ModuleMap
    image_in_kernel: Matrix  # columns: images of f's source generators in kernel coordinates


def homology(f: ModuleMap, g: ModuleMap) -> Homology:
    """ker g / im f for composable f: A -> B, g: B -> C with g∘f = 0."""
    if f.target != g.source:
        raise UsageError("homology needs composable maps")
    K, incl = map_kernel(g)
    R = f.ring
    sub = Submodule(R, g.source.ngens, list(incl.matrix.cols) + list(g.source.presentation.cols))
    lifted = []
    for c in f.matrix.cols:
        x = sub.lift(c)
        if x is None:
            raise UsageError("g∘f is not zero: image of f escapes ker g")
        lifted.append(tuple(x[: K.ngens]))
    F = Matrix(R, K.ngens, len(lifted), lifted)
    H = PresentedModule(R, F.hstack(K.presentation))
    return Homology(H, K, incl, F)


# ------------------------------------------------------------ exact sequences


@dataclass
class JunctionEvidence:
    position: int
    composite_zero: bool
    kernel_in_image: bool
    kernel_generators: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.composite_zero and self.kernel_in_image


@dataclass
class ExactSequenceWitness:
    """Composable maps M_0 -> M_1 -> ... ; ``certified`` is filled by :func:`is_exact`."""

    maps: list
    certified: list = field(default_factory=list)

    @property
    def modules(self) -> list:
        return [self.maps[0].source] + [m.target for m in self.maps]


def short_exact(f: ModuleMap, g: ModuleMap) -> ExactSequenceWitness:
    """0 -> A -f-> B -g-> C -> 0."""
    R = f.ring
    Z = PresentedModule.zero(R)
    A, C = f.source, g.target
    return ExactSequenceWitness([ModuleMap.zero(Z, A), f, g, ModuleMap.zero(C, Z)])


def check_exact(seq: ExactSequenceWitness) -> tuple[bool, str]:
    """Exactness with a reason on failure; fills ``seq.certified``."""
    seq.certified = []
    for k, m in enumerate(seq.maps):
        j = m.offending_column()
        if j is not None:
            return False, f"map {k} is not well defined (source relation {j})"
    for k in range(len(seq.maps) - 1):
        f, g = seq.maps[k], seq.maps[k + 1]
        if f.target != g.source:
            return False, f"maps {k} and {k + 1} are not composable"
        comp_zero = g.compose(f).is_zero()
        ker = kernel_generators(g)
        img = Submodule(f.ring, f.target.ngens, list(f.matrix.cols) + list(f.target.presentation.cols))
        ker_in_im = all(img.contains(u) for u in ker)
        ev = JunctionEvidence(k + 1, comp_zero, ker_in_im, ker)
        seq.certified.append(ev)
        if not comp_zero:
            return False, f"composite of maps {k} and {k + 1} is nonzero"
        if not ker_in_im:
            return False, f"kernel of map {k + 1} not contained in image of map {k}"
    return True, ""


def is_exact(seq: ExactSequenceWitness) -> bool:
    return check_exact(seq)[0]


# ------------------------------------------------------- pushout / pullback


def pushout(f: ModuleMap, g: ModuleMap):
    """Pushout of A <-f- L -g-> B: coker of (f, -g) with canonical maps from A and B."""
    if f.source != g.source:
        raise UsageError("pushout needs maps with a common source")
    R = f.ring
    A, B = f.target, g.target
    top = A.presentation.hstack(Matrix.zero(R, A.ngens, B.nrels), f.matrix)
    bottom = Matrix.zero(R, B.ngens, A.nrels).hstack(B.presentation, -g.matrix)
    P = PresentedModule(R, top.vstack(bottom))
    iA = ModuleMap(A, P, Matrix.identity(R, A.ngens).vstack(Matrix.zero(R, B.ngens, A.ngens)))
    iB = ModuleMap(B, P, Matrix.zero(R, A.ngens, B.ngens).vstack(Matrix.identity(R, B.ngens)))
    return P, iA, iB


def pullback(f: ModuleMap, g: ModuleMap):
    """Pullback of A -f-> C <-g- B: kernel of (f, -g) on A ⊕ B with both projections."""
    if f.target != g.target:
        raise UsageError("pullback needs maps with a common target")
    R = f.ring
    A, B, C = f.source, g.source, f.target
    AB = direct_sum(A, B)
    h = ModuleMap(AB, C, f.matrix.hstack(-g.matrix))
    K, incl = map_kernel(h)
    pA = ModuleMap(K, A, incl.matrix.select_rows(range(A.ngens)))
    pB = ModuleMap(K, B, incl.matrix.select_rows(range(A.ngens, A.ngens + B.ngens)))
    return K, pA, pB


# ------------------------------------------------------------ annihilators


def ann_element(M: PresentedModule, m) -> Ideal:
    """(0 :_R m) for the element with coordinates ``m``."""
    R = M.ring
    m = tuple(R(x) for x in m)
    if M.element_is_zero(m):
        return Ideal(R, [R.one()])
    big = Matrix(R, M.ngens, 1, [m]).hstack(M.presentation)
    syz = Submodule(R, M.ngens, big.cols).syzygies()
    return Ideal(R, [z[0] for z in syz if z[0]])


def annihilator(M: PresentedModule) -> Ideal:
    R = M.ring
    result = Ideal(R, [R.one()])
    for i in range(M.ngens):
        a = ann_element(M, M.unit_vector(i))
        result = a if result.is_unit() else ideal_intersect(result, a)
    return result


# ------------------------------------------------------------ minimization


@dataclass
class Minimized:
    module: PresentedModule
    to_min: ModuleMap  # M -> module
    from_min: ModuleMap  # module -> M
    graded: bool


def minimize(M: PresentedModule) -> Minimized:
    """Split off unit entries and drop redundant relations.

    The result is a minimal presentation when M is graded; otherwise it is a
    smaller presentation of the same module with no minimality claim.
    """
    R = M.ring
    A = [list(r) for r in M.presentation.rows()]
    r = M.ngens
    keep_gens = list(range(r))
    one, z = R.one(), R.zero()
    T = [[one if i == j else z for j in range(r)] for i in range(r)]  # current gens x original gens
    field = R.field
    while True:
        pivot = None
        ncols = len(A[0]) if A else 0
        for j in range(ncols):
            for i in range(len(A)):
                if A[i][j] and A[i][j].is_constant():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        cinv = field.inv(A[i][j].constant_value())
        colj = [A[k][j] for k in range(len(A))]
        rowi = A[i]
        newA = []
        for k in range(len(A)):
            if k == i:
                continue
            fac = colj[k].scale(cinv)
            newA.append([R(A[k][l] - fac * rowi[l]) for l in range(ncols) if l != j])
        sub = [R(-colj[k].scale(cinv)) for k in range(len(A))]
        newT = []
        for k in range(len(T)):
            if k == i:
                continue
            newT.append([R(T[k][t] + sub[k] * T[i][t]) for t in range(r)])
        A, T = newA, newT
        del keep_gens[i]
    ngen = len(keep_gens)
    cols = [tuple(A[k][j] for k in range(ngen)) for j in range(len(A[0]) if A else 0)]
    P0 = PresentedModule(R, Matrix(R, ngen, len(cols), cols))
    cols = [c for c in cols if any(c)]
    grading = infer_grading(Matrix(R, ngen, len(cols), cols)) if ring_weights(R) else None
    graded = grading is not None
    if graded:
        weights = ring_weights(R)
        degs = [column_degree(c, grading[0], weights) for c in cols]
        order = sorted(range(len(cols)), key=lambda j: degs[j])
    else:
        order = list(range(len(cols)))
    kept: list = []
    for j in order:
        if not Submodule(R, ngen, kept).contains(cols[j]):
            kept.append(cols[j])
    if graded:
        # a later generator of equal degree may make an earlier one redundant; sweep again
        changed = True
        while changed:
            changed = False
            for idx in range(len(kept)):
                others = kept[:idx] + kept[idx + 1 :]
                if Submodule(R, ngen, others).contains(kept[idx]):
                    del kept[idx]
                    changed = True
                    break
    N = PresentedModule(R, Matrix(R, ngen, len(kept), kept))
    to_min = ModuleMap(M, N, Matrix(R, ngen, r, [[T[k][t] for k in range(ngen)] for t in range(r)]))
    from_min = ModuleMap(
        N, M, Matrix(R, r, ngen, [[one if i == g else z for i in range(r)] for g in keep_gens])
    )
    del P0
    return Minimized(N, to_min, from_min, graded)


def is_graded(M: PresentedModule) -> bool:
    return ring_weights(M.ring) is not None and infer_grading(M.presentation) is not None


@dataclass
class FreeResult:
    status: str  # "free" | "not_free" | "undecided"
    rank: Optional[int] = None
    minimal: Optional[Minimized] = None
    relations: Optional[Matrix] = None
    reason: str = ""

    @property
    def is_free(self) -> bool:
        return self.status == "free"


def is_free(M: PresentedModule) -> FreeResult:
    if not is_graded(M):
        return FreeResult("undecided", reason="freeness is only decided for graded presentations")
    mn = minimize(M)
    if mn.module.nrels == 0:
        return FreeResult("free", rank=mn.module.ngens, minimal=mn)
    return FreeResult("not_free", minimal=mn, relations=mn.module.presentation)


def minimal_generator_count(M: PresentedModule) -> int:
    if not is_graded(M):
        raise NotGraded("minimal generator count needs a graded presentation")
    return minimize(M).module.ngens


# ------------------------------------------------------------ resolutions


@dataclass
class Resolution:
    """Free resolution ... -> F_1 -> F_0 -> M; ``maps[i]`` is d_{i+1}: F_{i+1} -> F_i."""

    module: PresentedModule
    maps: list
    bound: int
    graded: bool
    terminated: bool

    @property
    def ranks(self) -> list[int]:
        if not self.maps:
            return [self.module.ngens]
        return [self.maps[0].nrows] + [d.ncols for d in self.maps]

    @property
    def length(self) -> int:
        return len(self.maps)

    @property
    def pd(self) -> Optional[int]:
        """Exact projective dimension when it is decided, else None."""
        if self.terminated and self.graded:
            return self.length
        return None

    def pd_report(self) -> str:
        if self.terminated:
            if self.graded:
                return str(self.length)
            return f"<= {self.length}"
        return f">= {self.bound + 1}" if self.graded else "unknown"


def default_bound(R) -> int:
    return 2 * R.dim + 4


def _minimal_columns(R, nrows, cols, row_degrees, weights):
    """Drop columns lying in the span of the others, scanning in degree order."""
    cols = [c for c in cols if any(c)]
    if row_degrees is not None:
        degs = [column_degree(c, row_degrees, weights) for c in cols]
        order = sorted(range(len(cols)), key=lambda j: degs[j])
    else:
        order = list(range(len(cols)))
    kept = []
    for j in order:
        if not Submodule(R, nrows, kept).contains(cols[j]):
            kept.append(cols[j])
    return kept


def free_resolution(M: PresentedModule, bound: int | None = None, cancel=None) -> Resolution:
    """Resolve M up to F_{bound+1} (minimal when M is graded).

    ``cancel`` is an optional threading.Event checked between steps and inside
    Gröbner computations.
    """
    from ..errors import Cancelled

    R = M.ring
    if bound is None:
        bound = default_bound(R)
    if bound < 0:
        raise UsageError("resolution bound must be non-negative")
    graded = is_graded(M)
    weights = ring_weights(R)
    if graded:
        mn = minimize(M).module
    else:
        mn = M
    d = mn.presentation
    d = Matrix(R, d.nrows, d.ncols, [c for c in d.cols if any(c)])
    maps = []
    row_deg = infer_grading(d)[0] if graded else None
    terminated = False
    while True:
        if cancel is not None and cancel.is_set():
            raise Cancelled("free resolution cancelled")
        if d.ncols == 0:
            terminated = True
            break
        if len(maps) == bound + 1:
            break
        maps.append(d)
        col_deg = None
        if graded:
            col_deg = tuple(column_degree(c, row_deg, weights) for c in d.cols)
        syz = Submodule(R, d.nrows, d.cols, cancel=cancel).syzygies()
        cols = _minimal_columns(R, d.ncols, syz, col_deg, weights)
        d = Matrix(R, d.ncols, len(cols), cols)
        row_deg = col_deg
    return Resolution(M, maps, bound, graded, terminated)


# ------------------------------------------------------- canonical evidence


def reduce_columns(sub: Submodule, M: Matrix) -> Matrix:
    return Matrix(M.ring, M.nrows, M.ncols, [sub.reduce(c) for c in M.cols])


def canonical_map(f: ModuleMap) -> ModuleMap:
    return f.reduced()


def is_canonical_map(f: ModuleMap) -> bool:
    rel = f.target.relations()
    return all(rel.reduce(c) == tuple(c) for c in f.matrix.cols)


def image_submodule(f: ModuleMap) -> Submodule:
    return Submodule(f.ring, f.target.ngens, list(f.matrix.cols) + list(f.target.presentation.cols))


@dataclass
class SequenceEvidence:
    """Pins a short exact sequence 0 -> A -f-> E -g-> B -> 0.

    ``lift`` holds coordinates in A of the kernel generators of g (so that
    f·lift equals them); ``section`` holds preimages under g of the generators
    of B, in normal form modulo im f.
    """

    lift: Matrix
    section: Matrix


def sequence_evidence(f: ModuleMap, g: ModuleMap) -> SequenceEvidence:
    R = f.ring
    A, E, B = f.source, f.target, g.target
    U = kernel_generators(g)
    img = image_submodule(f)
    relA = A.relations()
    lift_cols = []
    for u in U:
        c = img.lift(u)
        if c is None:
            raise UsageError("kernel of g is not inside the image of f")
        lift_cols.append(relA.reduce(c[: A.ngens]))
    imsub = Submodule(R, E.ngens, list(f.matrix.cols) + list(E.presentation.cols))
    gsub = image_submodule(g)
    sec_cols = []
    for k in range(B.ngens):
        x = gsub.lift(B.unit_vector(k))
        if x is None:
            raise UsageError("g is not surjective")
        sec_cols.append(imsub.reduce(x[: E.ngens]))
    return SequenceEvidence(Matrix(R, A.ngens, len(lift_cols), lift_cols), Matrix(R, E.ngens, B.ngens, sec_cols))


def check_sequence_evidence(f: ModuleMap, g: ModuleMap, ev: SequenceEvidence) -> Optional[str]:
    """None when the evidence is canonical and consistent with f and g, else a reason."""
    R = f.ring
    A, E, B = f.source, f.target, g.target
    U = kernel_generators(g)
    if (ev.lift.nrows, ev.lift.ncols) != (A.ngens, len(U)):
        return "lift evidence has the wrong shape"
    if (ev.section.nrows, ev.section.ncols) != (E.ngens, B.ngens):
        return "section evidence has the wrong shape"
    relA, relE, relB = A.relations(), E.relations(), B.relations()
    for c in ev.lift.cols:
        if relA.reduce(c) != tuple(c):
            return "lift evidence is not in normal form"
    for c, u in zip((f.matrix * ev.lift).cols, U):
        if relE.reduce(c) != relE.reduce(u):
            return "f applied to the lift evidence misses the kernel of g"
    imsub = Submodule(R, E.ngens, list(f.matrix.cols) + list(E.presentation.cols))
    for c in ev.section.cols:
        if imsub.reduce(c) != tuple(c):
            return "section evidence is not in normal form modulo im f"
    gs = g.matrix * ev.section
    for k, c in enumerate(gs.cols):
        if not relB.contains(tuple(a - b for a, b in zip(c, B.unit_vector(k)))):
            return "g does not send the section evidence to the generators"
    return None
