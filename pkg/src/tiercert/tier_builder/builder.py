"""Certificate construction: prime filtrations, Mayer–Vietoris, Koszul descent."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from ..certificate import LeafSingPrime, Step, TierCertificate, Zero, tier_index
from ..errors import BuilderInvariantViolation, PrimalityUndecided, SearchExhausted, UsageError
from ..koszul import koszul_complex
from ..module_kernel import (
    Matrix,
    ModuleMap,
    PresentedModule,
    Submodule,
    ann_element,
    direct_sum,
    lift_map,
    map_kernel,
    submodule_presentation,
)
from ..ring_kernel import Ideal, QuotientRing, height, ideal_intersect, ideal_quotient, is_prime
from ..ring_kernel.poly import format_poly
from ..singularity import codim_sing, in_sing, supported_in_sing
from . import steps
from .config import BuilderConfig


@dataclass
class PrimeTask:
    prime: Ideal
    n_rank: int
    height: int


@dataclass
class FiltrationStep:
    element: tuple  # coordinates in the filtered module
    prime: Ideal
    primality: str  # "proved" | "assumed"


@dataclass
class SupportCheck:
    prime: str
    degree: int
    supported: bool


@dataclass
class BuilderTrace:
    koszul_support: list = field(default_factory=list)
    prime_tasks: list = field(default_factory=list)
    rank_checks: list = field(default_factory=list)  # (parent n, child n) pairs


def ideal_text(I: Ideal) -> str:
    return "(" + ", ".join(format_poly(g) for g in I.generators()) + ")"


def cyclic_of(I: Ideal) -> PresentedModule:
    return PresentedModule.cyclic(I.ring, I.generators())


class Builder:
    def __init__(self, ring: QuotientRing, config: BuilderConfig | None = None):
        self.ring = ring
        self.config = config or BuilderConfig()
        self.trace = BuilderTrace()
        self._prime_steps: dict = {}
        ring.require_equidimensional("certify")

    # ------------------------------------------------------------ primes

    def n_rank(self, p: Ideal) -> int:
        """Induction measure: 0 for singular primes, 1 + dim R/p otherwise."""
        return 0 if in_sing(p) else 1 + p.dim()

    def primality(self, p: Ideal) -> str:
        res = is_prime(p)
        if res.is_prime:
            return "proved"
        if res.is_not_prime:
            raise BuilderInvariantViolation(f"{ideal_text(p)} is not prime (witness {res.witness})")
        if self.config.primality_policy == "assume":
            return "assumed"
        raise PrimalityUndecided(f"cannot decide whether {ideal_text(p)} is prime", p)

    # --------------------------------------------------------- filtration

    def prime_filtration(self, M: PresentedModule) -> list[FiltrationStep]:
        """0 = M_0 ⊂ ... ⊂ M_t = M with M_j / M_{j-1} ≅ R/p_j."""
        R = self.ring
        if M.is_zero():
            raise UsageError("prime filtration of the zero module")
        chosen: list[FiltrationStep] = []
        while True:
            Q = PresentedModule(R, M.presentation.hstack(Matrix(R, M.ngens, len(chosen), [c.element for c in chosen])))
            if Q.is_zero():
                return chosen
            i = next(k for k in range(M.ngens) if not Q.element_is_zero(Q.unit_vector(k)))
            m = Q.unit_vector(i)
            while True:
                ann = ann_element(Q, m)
                res = is_prime(ann)
                if res.is_prime:
                    flag = "proved"
                    break
                if res.is_not_prime:
                    f = R(res.witness[0])
                    if ann.contains(f):
                        f = R(res.witness[1])
                    m = tuple(R(f * x) for x in m)
                    continue
                if self.config.primality_policy == "assume":
                    flag = "assumed"
                    break
                raise PrimalityUndecided(f"annihilator {ideal_text(ann)} is of undecided primality", ann)
            chosen.append(FiltrationStep(Q.reduce(m), ann.canonical(), flag))

    def certify_module(self, M: PresentedModule) -> Step:
        if M.is_zero():
            return Zero(M)
        filt = self.prime_filtration(M)
        prime_steps = [self.prime_step(fs.prime, fs.primality) for fs in filt]
        R = self.ring
        cur = prime_steps[0]
        for j in range(2, len(filt) + 1):
            Mj, _ = submodule_presentation(M, [fs.element for fs in filt[:j]])
            one, z = R.one(), R.zero()
            f = Matrix(R, j, j - 1, [[one if r == c else z for r in range(j)] for c in range(j - 1)])
            g = Matrix(R, 1, j, [[z]] * (j - 1) + [[one]])
            cur = steps.extension(cur, prime_steps[j - 1], Mj, f, g)
        if cur.module == M:
            return cur
        t = len(filt)
        fwd = Matrix(R, M.ngens, t, [fs.element for fs in filt])
        span = Submodule(R, M.ngens, [fs.element for fs in filt] + list(M.presentation.cols))
        inv_cols = []
        for k in range(M.ngens):
            c = span.lift(M.unit_vector(k))
            if c is None:
                raise BuilderInvariantViolation("filtration does not exhaust the module")
            inv_cols.append(c[:t])
        inv = Matrix(R, t, M.ngens, inv_cols)
        return steps.isomorphism(M, cur, fwd, inv)

    # ----------------------------------------------------- per-prime step

    def prime_step(self, p: Ideal, primality: str = "proved") -> Step:
        key = p.key()
        if key not in self._prime_steps:
            self._prime_steps[key] = self._prime_step(p, primality)
        return self._prime_steps[key]

    def _prime_step(self, p: Ideal, primality: str) -> Step:
        R = self.ring
        Rp = cyclic_of(p)
        task = PrimeTask(p, self.n_rank(p), height(p))
        self.trace.prime_tasks.append(task)
        if task.n_rank == 0:
            return LeafSingPrime(Rp, p.canonical(), primality)
        xs, f = self.choose_regular_system(p, task.height)
        I = Ideal(R, xs)
        base = self.koszul_descent(xs)
        one = R.one()
        if I.contains_ideal(p):
            return steps.isomorphism(Rp, base, [[one]], [[one]])
        a = self.colon_witness(I, p, f)
        Ia = Ideal(R, list(xs) + [a])
        pa = (p + Ideal(R, [a])).canonical()
        if ideal_intersect(Ia, p) != I:
            raise BuilderInvariantViolation(f"I != (I + (a)) ∩ p for p = {ideal_text(p)}")
        for q in self._support_primes(pa):
            child = self.n_rank(q)
            self.trace.rank_checks.append((task.n_rank, child))
            if child >= task.n_rank:
                raise BuilderInvariantViolation("induction measure did not decrease")
        quot = self.certify_module(cyclic_of(pa))
        mid = direct_sum(Rp, PresentedModule.cyclic(R, list(xs) + [a]))
        ext = steps.extension(base, quot, mid, [[one], [one]], [[one, -one]])
        return steps.summand(Rp, ext, [[one], [R.zero()]], [[one, R.zero()]])

    def _support_primes(self, I: Ideal) -> list[Ideal]:
        if I.is_unit():
            return []
        return [fs.prime for fs in self.prime_filtration(cyclic_of(I))]

    # ------------------------------------------------ searches with checks

    def _regular_system_ok(self, p: Ideal, xs, h: int) -> Optional[object]:
        """Return the witness f ∈ (I : p) \\ p when xs qualifies, else None."""
        R = self.ring
        I = Ideal(R, xs)
        if not p.contains_ideal(I) or I.is_unit():
            return None
        if R.dim - I.dim() != h:
            return None
        if I.contains_ideal(p):
            return R.one()
        col = ideal_quotient(I, p)
        for g in col.generators():
            if not p.contains(g):
                return g
        return None

    def _random_poly(self, rng, degree: int):
        R = self.ring
        S = R.ambient
        f = S.zero()
        from itertools import combinations_with_replacement

        for d in range(degree + 1):
            for combo in combinations_with_replacement(range(S.nvars), d):
                m = [0] * S.nvars
                for i in combo:
                    m[i] += 1
                f = f + S.monomial(m, self._random_coeff(rng))
        return R(f)

    def _random_coeff(self, rng):
        p = self.ring.field.characteristic
        return rng.randrange(p) if p else rng.randint(-3, 3)

    def choose_regular_system(self, p: Ideal, h: int):
        """x_1..x_h in p with ht (x) = h and (x)R_p = pR_p, plus the witness f."""
        R = self.ring
        gens = p.generators()
        if h == 0:
            f = self._regular_system_ok(p, [], 0)
            if f is not None:
                return [], f
            raise SearchExhausted(f"no witness for a height-0 prime {ideal_text(p)}", PrimeTask(p, self.n_rank(p), 0))
        if len(gens) == h:
            f = self._regular_system_ok(p, gens, h)
            if f is not None:
                return list(gens), f
        rng = self.config.rng("regular-system " + ideal_text(p))
        attempts = self.config.max_random_attempts
        for k in range(attempts):
            if k < attempts // 2:
                xs = [R(sum((g.scale(self._random_coeff(rng)) for g in gens), R.zero())) for _ in range(h)]
            else:
                deg = 1 + (k % max(1, self.config.degree_bound))
                xs = [R(sum((self._random_poly(rng, deg - 1) * g for g in gens), R.zero())) for _ in range(h)]
            if any(not x for x in xs):
                continue
            f = self._regular_system_ok(p, xs, h)
            if f is not None:
                return xs, f
        raise SearchExhausted(
            f"no regular system of parameters found for {ideal_text(p)} after {attempts} draws",
            PrimeTask(p, self.n_rank(p), h),
        )

    def colon_witness(self, I: Ideal, p: Ideal, hint=None):
        """a ∉ p with (I : a) = p."""
        R = self.ring
        if I.contains_ideal(p):
            return R.one()

        def ok(a):
            return a and not p.contains(a) and ideal_quotient(I, a) == p

        if hint is not None and ok(R(hint)):
            return R(hint)
        col = ideal_quotient(I, p)
        cands = col.generators()
        for a in cands:
            if ok(a):
                return a
        rng = self.config.rng("colon " + ideal_text(I) + " " + ideal_text(p))
        for _ in range(self.config.max_random_attempts):
            a = R(sum((g.scale(self._random_coeff(rng)) for g in cands), R.zero()))
            if ok(a):
                return a
        raise SearchExhausted(f"no colon witness for {ideal_text(p)} over {ideal_text(I)}", PrimeTask(p, self.n_rank(p), height(p)))

    # -------------------------------------------------------- Koszul part

    def _check_support(self, H: PresentedModule, i: int, xs):
        ok = supported_in_sing(H)
        self.trace.koszul_support.append(SupportCheck("(" + ", ".join(format_poly(x) for x in xs) + ")", i, ok))
        if not ok:
            raise BuilderInvariantViolation(f"H_{i} of the Koszul complex is not supported in Sing R")

    def _homology_step(self, H: PresentedModule) -> Step:
        step = self.certify_module(H)
        if tier_index(step) != -1:
            raise BuilderInvariantViolation("Koszul homology did not certify at tier -1")
        return step

    def koszul_descent(self, xs) -> Step:
        """Certificate of R/(xs) at tier len(xs) built from the Koszul complex."""
        R = self.ring
        h = len(xs)
        one = R.one()
        if h == 0:
            Z = Zero(PresentedModule.zero(R))
            return steps.cosyzygy(Z, 1, PresentedModule.cyclic(R, []), Matrix.zero(R, 1, 0), [[one]])
        K = koszul_complex(R, xs)

        def free(i):
            return PresentedModule.free(R, math.comb(h, i))

        Kmod, incl = map_kernel(ModuleMap(free(h), free(h - 1), K.d(h)))
        self._check_support(Kmod, h, xs)
        ker_step = self._homology_step(Kmod)
        for i in range(h, 0, -1):
            U = incl.matrix
            rank = math.comb(h, i)
            Im = PresentedModule(R, U)
            im_step = steps.cosyzygy(ker_step, rank, Im, U, Matrix.identity(R, rank))
            if i == 1:
                return steps.cosyzygy(im_step, 1, PresentedModule.cyclic(R, xs), K.d(1), [[one]])
            Kmod, incl = map_kernel(ModuleMap(free(i - 1), free(i - 2), K.d(i - 1)))
            h_map = lift_map(incl, ModuleMap(Im, free(i - 1), K.d(i)))
            H = PresentedModule(R, h_map.matrix.hstack(Kmod.presentation))
            self._check_support(H, i - 1, xs)
            H_step = self._homology_step(H)
            ker_step = steps.extension(im_step, H_step, Kmod, h_map.matrix, Matrix.identity(R, Kmod.ngens))
        raise AssertionError("unreachable")

    # ------------------------------------------------------------- entry

    def certify(self, M: PresentedModule) -> TierCertificate:
        if M.ring != self.ring:
            raise UsageError("module over a different ring")
        step = self.certify_module(M)
        t = tier_index(step)
        c = codim_sing(self.ring)
        if t > max(c, -1) and not (c == -1 and t == -1):
            raise BuilderInvariantViolation(f"certificate tier {t} exceeds codim Sing = {c}")
        cert = TierCertificate(self.ring, M, step, t)
        if self.config.self_check:
            from ..certificate import verify

            rep = verify(cert)
            if not rep.accepted:
                raise BuilderInvariantViolation(f"self-check failed: {rep.failures[:3]}")
        return cert


def certify(M: PresentedModule, config: BuilderConfig | None = None, builder: Builder | None = None) -> TierCertificate:
    b = builder or Builder(M.ring, config)
    return b.certify(M)
