"""Broken-circuit complexes of graphic matroids: exact enumeration, down-up
and local random walks with spectral certificates, and the gadget reductions
that connect them to independent-set optimization and counting."""

from .chains import (
    LocalProfile,
    StochasticMatrix,
    conductance,
    down_up_matrix,
    local_spectral_profile,
    local_to_global_bound,
    local_walk_matrix,
    neighbor_ratio,
    spectral_gap,
)
from .errors import PreconditionError, SizeGuardError, VerificationError
from .gadgets import (
    GadgetInstance,
    LinkPartition,
    ReductionReport,
    WeightVector,
    build_field_reduction,
    build_hardcore_reduction,
    build_link_gadget,
    build_long_edge_instance,
    build_opt_reduction,
    critical_threshold,
    gap_certificate,
    max_weight_independent_set,
    max_weight_nbc_base,
    nbc_partition_function,
    partition_link_facets,
    verify_counting_sandwich,
    verify_edge_witness,
    verify_hardcore_identities,
)
from .graphs import (
    IntPolynomial,
    MultiGraph,
    SizeCounts,
    build_named_graph,
    chromatic_polynomial,
    count_acyclic_orientations,
    count_g_parking_functions,
    count_independent_sets_by_size,
    disjoint_union,
    fundamental_cycle,
    hardcore_partition,
    is_forest,
    iter_independent_sets,
)
from .matroids import GraphicMatroid, Matroid, TruncatedMatroid
from .nbc import (
    ElementOrder,
    FaceNumbers,
    NbcComplex,
    contains_broken_circuit_bruteforce,
    enumerate_nbc_bases,
    extend_to_nbc_base,
    face_numbers,
    is_log_concave,
    is_nbc,
    link_facets,
)
from .verify import Check, run_suite

__version__ = "0.1.0"

__all__ = [
    "Check",
    "ElementOrder",
    "FaceNumbers",
    "GadgetInstance",
    "GraphicMatroid",
    "IntPolynomial",
    "LinkPartition",
    "LocalProfile",
    "Matroid",
    "MultiGraph",
    "NbcComplex",
    "PreconditionError",
    "ReductionReport",
    "SizeCounts",
    "SizeGuardError",
    "StochasticMatrix",
    "TruncatedMatroid",
    "VerificationError",
    "WeightVector",
    "build_field_reduction",
    "build_hardcore_reduction",
    "build_link_gadget",
    "build_long_edge_instance",
    "build_named_graph",
    "build_opt_reduction",
    "chromatic_polynomial",
    "conductance",
    "contains_broken_circuit_bruteforce",
    "count_acyclic_orientations",
    "count_g_parking_functions",
    "count_independent_sets_by_size",
    "critical_threshold",
    "disjoint_union",
    "down_up_matrix",
    "enumerate_nbc_bases",
    "extend_to_nbc_base",
    "face_numbers",
    "fundamental_cycle",
    "gap_certificate",
    "hardcore_partition",
    "is_forest",
    "is_log_concave",
    "is_nbc",
    "iter_independent_sets",
    "link_facets",
    "local_spectral_profile",
    "local_to_global_bound",
    "local_walk_matrix",
    "max_weight_independent_set",
    "max_weight_nbc_base",
    "nbc_partition_function",
    "neighbor_ratio",
    "partition_link_facets",
    "run_suite",
    "spectral_gap",
    "verify_counting_sandwich",
    "verify_edge_witness",
    "verify_hardcore_identities",
]
