from .grading import infer_grading, ring_weights
from .matrix import Matrix, Submodule, block_diag, syzygies
from .modules import (
    ExactSequenceWitness,
    FreeResult,
    Homology,
    JunctionEvidence,
    Minimized,
    ModuleMap,
    PresentedModule,
    Resolution,
    ann_element,
    annihilator,
    check_exact,
    default_bound,
    direct_sum,
    free_resolution,
    homology,
    image_contains,
    is_exact,
    is_free,
    is_graded,
    kernel_generators,
    lift_map,
    lift_through,
    map_kernel,
    minimal_generator_count,
    minimize,
    pullback,
    pushout,
    short_exact,
    submodule_presentation,
    SequenceEvidence,
    canonical_map,
    check_sequence_evidence,
    image_submodule,
    is_canonical_map,
    sequence_evidence,
)
