"""Certificate trees: steps, tier index and extension depth."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..module_kernel import Matrix, PresentedModule
from ..ring_kernel import Ideal, QuotientRing

KINDS = ("zero", "leaf_sing_prime", "extension", "summand", "cosyzygy", "isomorphism")


@dataclass(eq=False)
class Step:
    module: PresentedModule

    kind = "abstract"

    def children(self) -> list[tuple[str, "Step"]]:
        return []


@dataclass(eq=False)
class Zero(Step):
    kind = "zero"


@dataclass(eq=False)
class LeafSingPrime(Step):
    prime: Ideal = None
    primality: str = "proved"  # or "assumed" under the permissive policy

    kind = "leaf_sing_prime"


@dataclass(eq=False)
class Extension(Step):
    """0 -> sub -f-> module -g-> quotient -> 0 with pinning evidence."""

    sub: Step = None
    quotient: Step = None
    f: Matrix = None
    g: Matrix = None
    lift: Matrix = None
    section: Matrix = None
    copies: list = field(default_factory=list)  # presentations of [sub, module, quotient]

    kind = "extension"

    def children(self):
        return [("sub", self.sub), ("quotient", self.quotient)]


@dataclass(eq=False)
class Summand(Step):
    """module is a direct summand of the ambient: retraction ∘ inclusion = id."""

    ambient: Step = None
    inclusion: Matrix = None
    retraction: Matrix = None
    projector: Matrix = None  # inclusion ∘ retraction in normal form
    copies: list = field(default_factory=list)  # [module, ambient]

    kind = "summand"

    def children(self):
        return [("ambient", self.ambient)]


@dataclass(eq=False)
class Cosyzygy(Step):
    """0 -> kernel -f-> R^free_rank -g-> module -> 0."""

    kernel: Step = None
    free_rank: int = 0
    f: Matrix = None
    g: Matrix = None
    lift: Matrix = None
    section: Matrix = None
    copies: list = field(default_factory=list)  # [kernel, module]

    kind = "cosyzygy"

    def children(self):
        return [("kernel", self.kernel)]


@dataclass(eq=False)
class Isomorphism(Step):
    source: Step = None
    forward: Matrix = None  # source -> module
    inverse: Matrix = None  # module -> source
    copies: list = field(default_factory=list)  # [source, module]

    kind = "isomorphism"

    def children(self):
        return [("source", self.source)]


@dataclass(eq=False)
class TierCertificate:
    ring: QuotientRing
    root_module: PresentedModule
    step: Step
    claimed_tier: int
    notes: dict = field(default_factory=dict)

    @property
    def tier_index(self) -> int:
        return tier_index(self.step)

    @property
    def extension_depth(self) -> int:
        return extension_depth(self.step)


class StructuralError(ValueError):
    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


def _check_children(step: Step, path: str):
    for name, child in step.children():
        if not isinstance(child, Step):
            raise StructuralError(f"{path}.{name}", "missing child step")


def tier_index(step: Step, path: str = "$") -> int:
    """Structural tier: leaves -1, cosyzygy one above its kernel (floored at 0)."""
    if not isinstance(step, Step):
        raise StructuralError(path, "not a step")
    _check_children(step, path)
    if isinstance(step, (Zero, LeafSingPrime)):
        return -1
    if isinstance(step, Extension):
        return max(tier_index(step.sub, path + ".sub"), tier_index(step.quotient, path + ".quotient"))
    if isinstance(step, Summand):
        return tier_index(step.ambient, path + ".ambient")
    if isinstance(step, Isomorphism):
        return tier_index(step.source, path + ".source")
    if isinstance(step, Cosyzygy):
        return max(0, tier_index(step.kernel, path + ".kernel") + 1)
    raise StructuralError(path, f"unknown step kind {type(step).__name__}")


def extension_depth(step: Step) -> int:
    """Number of layers m with the module in |S|_m at its own tier level.

    Children at a lower tier count as a single building block.
    """
    t = tier_index(step)

    def depth_at(s: Step) -> int:
        if tier_index(s) < t:
            return 1
        if isinstance(s, (Zero, LeafSingPrime, Cosyzygy)):
            return 1
        if isinstance(s, Extension):
            return depth_at(s.sub) + depth_at(s.quotient)
        if isinstance(s, Summand):
            return depth_at(s.ambient)
        if isinstance(s, Isomorphism):
            return depth_at(s.source)
        raise StructuralError("$", "unknown step kind")

    return depth_at(step)


def walk(step: Step, path: str = "$"):
    """Pre-order traversal yielding (path, step)."""
    yield path, step
    for name, child in step.children():
        yield from walk(child, f"{path}.{name}")


def leaves(step: Step) -> list[LeafSingPrime]:
    return [s for _, s in walk(step) if isinstance(s, LeafSingPrime)]
