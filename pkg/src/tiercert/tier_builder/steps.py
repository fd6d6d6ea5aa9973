"""Step constructors that normalize maps and attach exactness evidence."""

from __future__ import annotations

from ..certificate import Cosyzygy, Extension, Isomorphism, Summand
from ..module_kernel import Matrix, ModuleMap, PresentedModule, sequence_evidence


def _mat(R, A, nrows, ncols):
    if isinstance(A, Matrix):
        return A
    return Matrix.from_rows(R, A, ncols=ncols) if nrows else Matrix.zero(R, 0, ncols)


def extension(sub, quotient, module: PresentedModule, f, g) -> Extension:
    R = module.ring
    fm = ModuleMap(sub.module, module, _mat(R, f, module.ngens, sub.module.ngens)).reduced()
    gm = ModuleMap(module, quotient.module, _mat(R, g, quotient.module.ngens, module.ngens)).reduced()
    ev = sequence_evidence(fm, gm)
    return Extension(
        module, sub, quotient, fm.matrix, gm.matrix, ev.lift, ev.section,
        [sub.module, module, quotient.module],
    )


def cosyzygy(kernel, rank: int, module: PresentedModule, f, g) -> Cosyzygy:
    R = module.ring
    F = PresentedModule.free(R, rank)
    fm = ModuleMap(kernel.module, F, _mat(R, f, rank, kernel.module.ngens)).reduced()
    gm = ModuleMap(F, module, _mat(R, g, module.ngens, rank)).reduced()
    ev = sequence_evidence(fm, gm)
    return Cosyzygy(module, kernel, rank, fm.matrix, gm.matrix, ev.lift, ev.section, [kernel.module, module])


def summand(module: PresentedModule, ambient, inclusion, retraction) -> Summand:
    R = module.ring
    Y = ambient.module
    i = ModuleMap(module, Y, _mat(R, inclusion, Y.ngens, module.ngens)).reduced()
    r = ModuleMap(Y, module, _mat(R, retraction, module.ngens, Y.ngens)).reduced()
    e = i.compose(r).reduced()
    return Summand(module, ambient, i.matrix, r.matrix, e.matrix, [module, Y])


def isomorphism(module: PresentedModule, source, forward, inverse) -> Isomorphism:
    R = module.ring
    X = source.module
    fw = ModuleMap(X, module, _mat(R, forward, module.ngens, X.ngens)).reduced()
    inv = ModuleMap(module, X, _mat(R, inverse, X.ngens, module.ngens)).reduced()
    return Isomorphism(module, source, fw.matrix, inv.matrix, [X, module])
