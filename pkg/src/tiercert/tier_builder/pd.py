"""Local projective dimension at a prime from Ext into R/p."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UsageError
from ..module_kernel import Matrix, ModuleMap, PresentedModule, annihilator, block_diag, free_resolution, homology
from ..ring_kernel import Ideal


@dataclass(frozen=True)
class LocalPD:
    value: int | None
    status: str  # "exact" | "lower_bound" | "not_supported"

    def __str__(self):
        if self.status == "not_supported":
            return "not supported"
        if self.status == "lower_bound":
            return f">= {self.value}"
        return str(self.value)

    def __int__(self):
        if self.status != "exact":
            raise ValueError(f"local pd is {self}")
        return self.value


def ext_into_quotient(res, p: Ideal, i: int) -> PresentedModule:
    """Ext^i(M, R/p) from the cochain complex Hom(F_•, R/p)."""
    R = p.ring
    gens = p.generators()
    ranks = res.ranks

    def T(j):
        r = ranks[j] if 0 <= j < len(ranks) else 0
        if r == 0:
            return PresentedModule.zero(R)
        return PresentedModule(R, block_diag(R, *([Matrix.from_rows(R, [gens])] * r)))

    def dual(j):  # d_j^T : Hom(F_{j-1}) -> Hom(F_j)
        src, tgt = T(j - 1), T(j)
        if j < 1 or j > len(res.maps):
            return ModuleMap.zero(src, tgt)
        return ModuleMap(src, tgt, res.maps[j - 1].transpose())

    return homology(dual(i), dual(i + 1)).module


def pd_at_prime(M: PresentedModule, p: Ideal, bound: int | None = None) -> LocalPD:
    """max{i <= bound : Ann Ext^i(M, R/p) ⊆ p}, i.e. pd of M_p over R_p."""
    R = M.ring
    if p.ring != R:
        raise UsageError("prime over a different ring")
    if bound is None:
        bound = R.dim + 2
    ann = annihilator(M)
    if not p.contains_ideal(ann):
        return LocalPD(None, "not_supported")
    res = free_resolution(M, bound)
    best = 0
    top = min(bound, res.length)
    for i in range(top + 1):
        E = ext_into_quotient(res, p, i)
        if E.is_zero():
            continue
        if p.contains_ideal(annihilator(E)):
            best = i
    if not res.terminated and best >= bound:
        return LocalPD(bound, "lower_bound")
    return LocalPD(best, "exact")
