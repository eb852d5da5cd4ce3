"""Finite poset algebra: chain posets of multichains, products, rank
profiles, normality, and Greene-Kleitman antichain families — all exact."""

from .analysis import (
    PROPERTY_NAMES,
    PropertyReport,
    is_normal,
    is_normal_exhaustive,
    is_rank_log_concave,
    is_rank_symmetric,
    is_rank_unimodal,
    is_strongly_sperner,
    max_j_family,
    max_j_family_bruteforce,
    max_j_family_with_family,
    normality_violation,
    property_report,
    property_violation,
    rank_polynomial,
    rank_log_concavity_violation,
    rank_symmetry_violation,
    rank_unimodality_violation,
    sperner_violation,
)
from .catalog import (
    boolean,
    example_sym,
    example_uni,
    isotropic,
    isotropic_general,
    total,
)
from .chains import chain_poset, multichain_rank
from .core import (
    CycleError,
    NotGradedError,
    Poset,
    PosetError,
    dump,
    find_isomorphism,
    from_covers,
    from_dict,
    is_connected,
    is_graded,
    is_isomorphic,
    leq,
    load,
    nabla,
    product,
    to_dict,
    whitney,
)
from .dsl import ParseError, evaluate, parse, to_text
from .flows import (
    FlowNetwork,
    InfeasibleFlowError,
    max_flow,
    min_cost_flow,
    min_cut,
    network,
)

__version__ = "0.1.0"

__all__ = [
    "PROPERTY_NAMES",
    "PropertyReport",
    "is_normal",
    "is_normal_exhaustive",
    "is_rank_log_concave",
    "is_rank_symmetric",
    "is_rank_unimodal",
    "is_strongly_sperner",
    "max_j_family",
    "max_j_family_bruteforce",
    "max_j_family_with_family",
    "normality_violation",
    "property_report",
    "property_violation",
    "rank_polynomial",
    "rank_log_concavity_violation",
    "rank_symmetry_violation",
    "rank_unimodality_violation",
    "sperner_violation",
    "boolean",
    "example_sym",
    "example_uni",
    "isotropic",
    "isotropic_general",
    "total",
    "chain_poset",
    "multichain_rank",
    "CycleError",
    "NotGradedError",
    "Poset",
    "PosetError",
    "dump",
    "find_isomorphism",
    "from_covers",
    "from_dict",
    "is_connected",
    "is_graded",
    "is_isomorphic",
    "leq",
    "load",
    "nabla",
    "product",
    "to_dict",
    "whitney",
    "ParseError",
    "evaluate",
    "parse",
    "to_text",
    "FlowNetwork",
    "InfeasibleFlowError",
    "max_flow",
    "min_cost_flow",
    "min_cut",
    "network",
    "__version__",
]
