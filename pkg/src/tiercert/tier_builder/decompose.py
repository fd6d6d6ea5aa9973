"""Decomposition 0 -> L -> M ⊕ M' -> P -> 0 with L of finite length and pd P <= n.

Works by structural recursion on a tier derivation of M over a graded local
ring whose singular locus is the maximal ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..certificate import (
    Cosyzygy,
    Extension,
    Isomorphism,
    LeafSingPrime,
    Step,
    Summand,
    TierCertificate,
    Zero,
    tier_index,
    walk,
)
from ..errors import BuilderInvariantViolation, UsageError
from ..koszul import depth, ring_depth
from ..module_kernel import (
    ExactSequenceWitness,
    Matrix,
    ModuleMap,
    PresentedModule,
    Submodule,
    annihilator,
    block_diag,
    check_exact,
    direct_sum,
    free_resolution,
    lift_map,
    lift_through,
    map_kernel,
    minimize,
    pullback,
    pushout,
    ring_weights,
    short_exact,
)


class DerivationNotNormalized(UsageError):
    """The quotient side of an extension does not come with a split decomposition."""


@dataclass
class Piece:
    module: PresentedModule  # X
    complement: PresentedModule  # X'
    L: PresentedModule
    P: PresentedModule
    middle: PresentedModule  # X ⊕ X', generators of X first
    alpha: ModuleMap  # L -> middle
    beta: ModuleMap  # middle -> P
    splitting: Optional[ModuleMap] = None  # middle -> L ⊕ P, an isomorphism


@dataclass
class DiagramTrace:
    """Intermediate objects of one inductive step, kept for inspection."""

    V: PresentedModule
    W: PresentedModule
    P2: PresentedModule  # P''
    L2: PresentedModule  # L''


@dataclass
class Decomposition:
    module: PresentedModule
    complement: PresentedModule
    L: PresentedModule
    P: PresentedModule
    sequence: ExactSequenceWitness
    checks: dict = field(default_factory=dict)
    diagrams: list = field(default_factory=list)

    @property
    def alpha(self) -> ModuleMap:
        return self.sequence.maps[1]

    @property
    def beta(self) -> ModuleMap:
        return self.sequence.maps[2]

    @property
    def ok(self) -> bool:
        return all(v for v in self.checks.values() if isinstance(v, bool))


# ------------------------------------------------------------------ helpers


def _id(R, n):
    return Matrix.identity(R, n)


def _z(R, r, c):
    return Matrix.zero(R, r, c)


def _blocks(R, rows):
    """Assemble a block matrix from a list of rows of Matrix blocks."""
    return Matrix.vstack(*[Matrix.hstack(*r) for r in rows]) if len(rows) > 1 else Matrix.hstack(*rows[0])


def _identity_map(M):
    return ModuleMap.identity(M)


def _sub(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    return ModuleMap(f.source, f.target, f.matrix - g.matrix)


def _atom_L(X: PresentedModule) -> Piece:
    R = X.ring
    Z = PresentedModule.zero(R)
    a = ModuleMap(X, X, _id(R, X.ngens))
    b = ModuleMap(X, Z, _z(R, 0, X.ngens))
    split = ModuleMap(X, direct_sum(X, Z), _id(R, X.ngens))
    return Piece(X, Z, X, Z, X, a, b, split)


def _atom_P(X: PresentedModule) -> Piece:
    R = X.ring
    Z = PresentedModule.zero(R)
    a = ModuleMap(Z, X, _z(R, X.ngens, 0))
    b = ModuleMap(X, X, _id(R, X.ngens))
    split = ModuleMap(X, direct_sum(Z, X), _id(R, X.ngens))
    return Piece(X, Z, Z, X, X, a, b, split)


def _rebase(piece: Piece, X: PresentedModule, Xc: PresentedModule, theta: Matrix, theta_inv: Matrix) -> Piece:
    """Transport a piece along an isomorphism theta: X ⊕ Xc -> old middle."""
    R = X.ring
    mid = direct_sum(X, Xc)
    th = ModuleMap(mid, piece.middle, theta)
    thi = ModuleMap(piece.middle, mid, theta_inv)
    alpha = thi.compose(piece.alpha)
    beta = piece.beta.compose(th)
    split = piece.splitting.compose(th) if piece.splitting is not None else None
    return Piece(X, Xc, piece.L, piece.P, mid, alpha, beta, split)


def _solve_cocycle(Pm: PresentedModule, AL: Matrix, C: Matrix) -> Optional[Matrix]:
    """H with H·AL ≡ C modulo the relations of Pm, or None."""
    R = Pm.ring
    p, m, r = Pm.ngens, AL.ncols, AL.nrows
    if m == 0:
        return _z(R, p, r)
    z = R.zero()
    gens = []
    for k in range(p):
        for l in range(r):
            v = [z] * (p * m)
            for j in range(m):
                v[k * m + j] = AL.entry(l, j)
            gens.append(v)
    nH = len(gens)
    for t in range(Pm.nrels):
        for j in range(m):
            v = [z] * (p * m)
            for k in range(p):
                v[k * m + j] = Pm.presentation.entry(k, t)
            gens.append(v)
    target = [C.entry(k, j) for k in range(p) for j in range(m)]
    coeffs = Submodule(R, p * m, gens).lift(target)
    if coeffs is None:
        return None
    rows = [[coeffs[k * r + l] for l in range(r)] for k in range(p)]
    return Matrix.from_rows(R, rows, ncols=r) if p else _z(R, 0, r)


def _free_splitting(alpha: ModuleMap, beta: ModuleMap) -> Optional[ModuleMap]:
    """middle -> L ⊕ P when P turns out to be free, else None."""
    P = beta.target
    R = P.ring
    mn = minimize(P)
    if mn.module.nrels != 0:
        return None
    F = mn.module
    sec_cols = []
    for k in range(F.ngens):
        x = lift_through(beta, mn.from_min.matrix.cols[k])
        if x is None:
            raise BuilderInvariantViolation("beta is not surjective")
        sec_cols.append(x)
    sigma = ModuleMap(F, beta.source, Matrix(R, beta.source.ngens, F.ngens, sec_cols)).compose(mn.to_min)
    V = beta.source
    retr = lift_map(alpha, _sub(_identity_map(V), sigma.compose(beta)))
    return ModuleMap(V, direct_sum(alpha.source, P), retr.matrix.vstack(beta.matrix))


# ------------------------------------------------------------- recursion


class _Decomposer:
    def __init__(self, R, n):
        self.R = R
        self.n = n
        self.diagrams: list[DiagramTrace] = []

    def piece(self, step: Step) -> Piece:
        X = step.module
        if isinstance(step, Zero) or X.is_zero():
            return _atom_L(X)
        t = tier_index(step)
        if t == -1:
            return _atom_L(X)
        if isinstance(step, Cosyzygy):
            return _atom_P(X)
        if isinstance(step, Isomorphism):
            return self._iso(step)
        if isinstance(step, Summand):
            return self._summand(step)
        if isinstance(step, Extension):
            return self._extension(step)
        raise UsageError(f"cannot decompose a step of kind {step.kind}")

    def _iso(self, step: Isomorphism) -> Piece:
        R = self.R
        ch = self.piece(step.source)
        X, Yc = step.module, ch.complement
        c = Yc.ngens
        theta = block_diag(R, step.inverse, _id(R, c))
        theta_inv = block_diag(R, step.forward, _id(R, c))
        return _rebase(ch, X, Yc, theta, theta_inv)

    def _summand(self, step: Summand) -> Piece:
        R = self.R
        ch = self.piece(step.ambient)
        X, Y, Yc = step.module, step.ambient.module, ch.complement
        i = ModuleMap(X, Y, step.inclusion)
        r = ModuleMap(Y, X, step.retraction)
        C, j = map_kernel(r)
        pC = lift_map(j, _sub(_identity_map(Y), i.compose(r)))
        c = Yc.ngens
        theta = _blocks(R, [
            [step.inclusion, j.matrix, _z(R, Y.ngens, c)],
            [_z(R, c, X.ngens), _z(R, c, C.ngens), _id(R, c)],
        ])
        theta_inv = _blocks(R, [
            [step.retraction, _z(R, X.ngens, c)],
            [pC.matrix, _z(R, C.ngens, c)],
            [_z(R, c, Y.ngens), _id(R, c)],
        ])
        return _rebase(ch, X, direct_sum(C, Yc), theta, theta_inv)

    def _extension(self, step: Extension) -> Piece:
        R = self.R
        A, E, B = step.sub.module, step.module, step.quotient.module
        dA = self.piece(step.sub)
        dB = self.piece(step.quotient)
        if dB.splitting is None:
            raise DerivationNotNormalized(
                "the quotient of an extension must decompose split; rebalance the derivation"
            )
        Ac, Bc = dA.complement, dB.complement
        a, e, b = A.ngens, E.ngens, B.ngens
        ac, bc = Ac.ngens, Bc.ngens
        V = direct_sum(E, Ac, Bc)
        AA = dA.middle
        iota = ModuleMap(AA, V, _blocks(R, [
            [step.f, _z(R, e, ac)],
            [_z(R, ac, a), _id(R, ac)],
            [_z(R, bc, a), _z(R, bc, ac)],
        ]))
        to_BB = ModuleMap(V, dB.middle, _blocks(R, [
            [step.g, _z(R, b, ac), _z(R, b, bc)],
            [_z(R, bc, e), _z(R, bc, ac), _id(R, bc)],
        ]))
        q0 = dB.splitting.compose(to_BB)  # V -> L ⊕ P
        LP = q0.target
        LB, PB = dB.L, dB.P
        # (po): push the sequence out along A ⊕ A' -> P'
        W, iV, iP1 = pushout(iota, dA.beta)
        w = ModuleMap(W, LP, q0.matrix.hstack(_z(R, LP.ngens, dA.P.ngens)))
        # (pb): P'' = preimage of P in W
        incP = ModuleMap(PB, LP, _z(R, LB.ngens, PB.ngens).vstack(_id(R, PB.ngens)))
        P2, prW, _prP = pullback(w, incP)
        lam = ModuleMap(W, LB, w.matrix.select_rows(range(LB.ngens)))
        # splitting L -> W, corrected by a cocycle with values in P''
        s0_cols = []
        for k in range(LB.ngens):
            x = lift_through(lam, LB.unit_vector(k))
            if x is None:
                raise BuilderInvariantViolation("W -> L is not surjective")
            s0_cols.append(x)
        s0 = Matrix(R, W.ngens, LB.ngens, s0_cols)
        c_cols = []
        for col in (s0 * LB.presentation).cols:
            x = lift_through(prW, col)
            if x is None:
                raise BuilderInvariantViolation("relation defect escapes P''")
            c_cols.append(x)
        Cmat = Matrix(R, P2.ngens, LB.nrels, c_cols)
        H = _solve_cocycle(P2, LB.presentation, Cmat)
        if H is None:
            raise BuilderInvariantViolation("no splitting of W -> L although Ext^1(L, P'') should vanish")
        s = ModuleMap(LB, W, s0 - prW.matrix * H)
        if not s.is_well_defined() or not lam.compose(s).is_identity():
            raise BuilderInvariantViolation("splitting witness failed its checks")
        rho = lift_map(prW, _sub(_identity_map(W), s.compose(lam)))
        beta = rho.compose(iV)
        # (pb2): L'' = preimage of L under V -> L ⊕ P''
        LP2 = direct_sum(LB, P2)
        toLP2 = ModuleMap(V, LP2, lam.compose(iV).matrix.vstack(beta.matrix))
        incL = ModuleMap(LB, LP2, _id(R, LB.ngens).vstack(_z(R, P2.ngens, LB.ngens)))
        L2, prV, _prL = pullback(toLP2, incL)
        self.diagrams.append(DiagramTrace(V, W, P2, L2))
        split = _free_splitting(prV, beta) if self.n <= 0 else None
        return Piece(E, direct_sum(Ac, Bc), L2, P2, V, prV, beta, split)


# -------------------------------------------------------------- entry


def finite_length(M: PresentedModule) -> bool:
    if M.is_zero():
        return True
    return annihilator(M).dim() <= 0


def pd_at_most(P: PresentedModule, n: int) -> bool:
    if P.is_zero():
        return True
    if n < 0:
        return False
    res = free_resolution(P, n + 1)
    return res.terminated and res.length <= n


def decompose_tier(cert, n: int) -> Decomposition:
    """Decompose the root module of a tier-n derivation (certificate or step)."""
    step = cert.step if isinstance(cert, TierCertificate) else cert
    M = step.module
    R = M.ring
    if ring_weights(R) is None:
        raise UsageError("decompose_tier needs a graded ring")
    dR = ring_depth(R)
    if not (-1 <= n <= dR - 2):
        raise UsageError(f"n = {n} is outside -1..depth R - 2 = {dR - 2}")
    t = tier_index(step)
    if t > n:
        raise UsageError(f"derivation has tier {t} > n = {n}")
    m = R.maximal_ideal()
    for path, s in walk(step):
        if isinstance(s, LeafSingPrime) and s.prime != m:
            raise UsageError(f"leaf at {path} is not the residue field")
    dec = _Decomposer(R, n)
    if n == -1:
        piece = _atom_L(M)
    else:
        piece = dec.piece(step)
    seq = short_exact(piece.alpha, piece.beta)
    exact, why = check_exact(seq)
    checks = {
        "finite_length": finite_length(piece.L),
        "pd_bound": pd_at_most(piece.P, n),
        "exact": exact,
    }
    if not exact:
        checks["exact_reason"] = why
    d = depth(M, R.gens())
    if d > 0:
        comp = ModuleMap(piece.L, M, piece.alpha.matrix.select_rows(range(M.ngens)))
        checks["alpha_zero"] = comp.is_zero()
    return Decomposition(M, piece.complement, piece.L, piece.P, seq, checks, dec.diagrams)
