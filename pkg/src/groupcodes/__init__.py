"""Exact decision procedures for the controllability hierarchy of
finitely generated subgroups of products of finite abelian groups,
torsion subgroups of torus powers included.

Everything is integer or rational arithmetic; no result is approximate
unless an explicit tolerance parameter says so.
"""

__version__ = "0.1.0"

from .control import (
    CONTROLLABLE,
    K_CONTROLLABLE,
    STRONGLY_CONTROLLABLE,
    UNIFORMLY_CONTROLLABLE,
    WEAKLY_CONTROLLABLE,
    Certificate,
    DefectProfile,
    EqualityClaim,
    Verdict,
    Witness,
    WindowOracle,
    controllable_at,
    hierarchy_consistent,
    is_controllable,
    is_k_controllable,
    is_strongly_controllable,
    is_uniformly_controllable,
    is_weakly_controllable_discrete,
    oracle_check,
    strong_index,
    translate_from_Z,
    uniformity_defect,
    verify_verdict,
    with_full_past,
)
from .errors import (
    CapExceeded,
    ChainNotStrict,
    GroupcodesError,
    InternalInconsistency,
    ParseError,
    PreconditionFailed,
    SchemaMismatch,
)
from .finabel import (
    FiniteAbelianGroup,
    GroupElement,
    Homomorphism,
    Subgroup,
    direct_sum,
    enumerate_subgroup,
    full,
    image,
    invariant_factors,
    kernel,
    member,
    preimage,
    span,
    subgroup_equal,
    subgroup_intersect,
    subgroup_le,
    subgroup_sum,
    trivial,
)
from .seqspace import (
    INFINITE,
    CoordSchema,
    ProductSubgroup,
    SeqElement,
    WindowCodec,
    constant,
    contains,
    delta,
    effective_window,
    enumerate_elements,
    from_values,
    intersect_directsum,
    intersect_sum_window,
    project,
    restrict,
    subgroup_order,
    subgroups_equal,
    support,
    uniform_schema,
    window_subgroup,
    zero_element,
)
from .structure import DecompositionReport, decompose, torsion_density
from .torus import (
    TorusSeq,
    TorusSeqSubgroup,
    approximate_constant,
    build_fk,
    circle_dist,
    closure_diff_check,
    constant_seq,
    in_span,
    noncontrollability_witness,
    qz,
    qz_order,
    qz_str,
    to_product_subgroup,
)

__all__ = [
    "__version__",
    "CONTROLLABLE",
    "K_CONTROLLABLE",
    "STRONGLY_CONTROLLABLE",
    "UNIFORMLY_CONTROLLABLE",
    "WEAKLY_CONTROLLABLE",
    "Certificate",
    "DefectProfile",
    "EqualityClaim",
    "Verdict",
    "Witness",
    "WindowOracle",
    "controllable_at",
    "hierarchy_consistent",
    "is_controllable",
    "is_k_controllable",
    "is_strongly_controllable",
    "is_uniformly_controllable",
    "is_weakly_controllable_discrete",
    "oracle_check",
    "strong_index",
    "translate_from_Z",
    "uniformity_defect",
    "verify_verdict",
    "with_full_past",
    "CapExceeded",
    "ChainNotStrict",
    "GroupcodesError",
    "InternalInconsistency",
    "ParseError",
    "PreconditionFailed",
    "SchemaMismatch",
    "FiniteAbelianGroup",
    "GroupElement",
    "Homomorphism",
    "Subgroup",
    "direct_sum",
    "enumerate_subgroup",
    "full",
    "image",
    "invariant_factors",
    "kernel",
    "member",
    "preimage",
    "span",
    "subgroup_equal",
    "subgroup_intersect",
    "subgroup_le",
    "subgroup_sum",
    "trivial",
    "INFINITE",
    "CoordSchema",
    "ProductSubgroup",
    "SeqElement",
    "WindowCodec",
    "constant",
    "contains",
    "delta",
    "effective_window",
    "enumerate_elements",
    "from_values",
    "intersect_directsum",
    "intersect_sum_window",
    "project",
    "restrict",
    "subgroup_order",
    "subgroups_equal",
    "support",
    "uniform_schema",
    "window_subgroup",
    "zero_element",
    "DecompositionReport",
    "decompose",
    "torsion_density",
    "TorusSeq",
    "TorusSeqSubgroup",
    "approximate_constant",
    "build_fk",
    "circle_dist",
    "closure_diff_check",
    "constant_seq",
    "in_span",
    "noncontrollability_witness",
    "qz",
    "qz_order",
    "qz_str",
    "to_product_subgroup",
]
