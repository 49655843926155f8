"""hgpoly: subhypergraph enumeration polynomials of finite hypergraphs,
Stanley-Reisner invariants of their edge ideals, exact rational homology
with multigraded Betti tables, and deck-based reconstruction of all of
it, in exact integer arithmetic throughout."""

from .bipoly import (
    BiPoly,
    UniPoly,
    divide_by_one_minus_t,
    expand_series,
    to_edge_form,
    to_vertex_form,
)
from .enumeration import (
    DEFAULT_LIMIT,
    edge_induced_poly,
    independence_poly,
    vertex_induced_poly,
)
from .errors import (
    AntichainViolation,
    DegreeExceedsN,
    DuplicateEdge,
    DuplicateVertexLabel,
    EmptyEdge,
    HgpolyError,
    InconsistentDeck,
    IndexOutOfRange,
    InputError,
    InternalMismatch,
    InvalidDeck,
    LengthMismatch,
    LimitExceeded,
    NegativeTopCoefficient,
    NoEdges,
    NonIntegerCoefficient,
    NotReconstructible,
    ParseError,
    PathsDisagree,
    SingleSpanningEdge,
    TooFewVertices,
    UnknownEdge,
    UnknownVertex,
    UnknownVertexLabel,
)
from .homology import (
    DEFAULT_HOMOLOGY_LIMIT,
    BettiTable,
    RecoveryResult,
    SimplicialComplex,
    antidiagonal_recovery,
    exact_rank,
    hochster_betti,
    independence_complex,
    pd_reg_depth,
    reduced_homology_dims,
    verify_betti_alternating_sum,
)
from .hypergraph import Deck, Hypergraph, disjoint_union, validate
from .reconstruct import (
    TopBettiReport,
    check_reconstructible,
    reconstruct_edge_poly,
    reconstruct_f_vector,
    reconstruct_hilbert_function,
    reconstruct_multigraded_betti,
    reconstruct_vertex_poly,
    top_betti_report,
    verify_deck_sum_identity,
)
from .stanley_reisner import (
    SRInvariants,
    exterior_face_poly,
    f_vector,
    h_vector,
    hilbert_function,
    hilbert_series_reduced,
    k_polynomial,
    krull_dim,
    multiplicity,
    sr_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "AntichainViolation",
    "BettiTable",
    "BiPoly",
    "DEFAULT_HOMOLOGY_LIMIT",
    "DEFAULT_LIMIT",
    "Deck",
    "DegreeExceedsN",
    "DuplicateEdge",
    "DuplicateVertexLabel",
    "EmptyEdge",
    "HgpolyError",
    "Hypergraph",
    "InconsistentDeck",
    "IndexOutOfRange",
    "InputError",
    "InternalMismatch",
    "InvalidDeck",
    "LengthMismatch",
    "LimitExceeded",
    "NegativeTopCoefficient",
    "NoEdges",
    "NonIntegerCoefficient",
    "NotReconstructible",
    "ParseError",
    "PathsDisagree",
    "RecoveryResult",
    "SRInvariants",
    "SimplicialComplex",
    "SingleSpanningEdge",
    "TooFewVertices",
    "TopBettiReport",
    "UniPoly",
    "UnknownEdge",
    "UnknownVertex",
    "UnknownVertexLabel",
    "antidiagonal_recovery",
    "check_reconstructible",
    "disjoint_union",
    "divide_by_one_minus_t",
    "edge_induced_poly",
    "exact_rank",
    "expand_series",
    "exterior_face_poly",
    "f_vector",
    "h_vector",
    "hilbert_function",
    "hilbert_series_reduced",
    "hochster_betti",
    "independence_complex",
    "independence_poly",
    "k_polynomial",
    "krull_dim",
    "multiplicity",
    "pd_reg_depth",
    "reconstruct_edge_poly",
    "reconstruct_f_vector",
    "reconstruct_hilbert_function",
    "reconstruct_multigraded_betti",
    "reconstruct_vertex_poly",
    "reduced_homology_dims",
    "sr_invariants",
    "to_edge_form",
    "to_vertex_form",
    "top_betti_report",
    "validate",
    "verify_betti_alternating_sum",
    "verify_deck_sum_identity",
    "vertex_induced_poly",
]
