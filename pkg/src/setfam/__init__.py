"""Exact extremal set family toolkit.

Constructions, exact counting, closed-form bounds, certified minimization,
and the Kneser-graph spectral view for the minimum-disjoint-pairs problem
on families of k-subsets of {1, ..., n}.
"""

from .core import (
    ContextError,
    FamilyFormatError,
    KSet,
    NotACoverError,
    Params,
    RangeError,
    SetFamily,
    ShapeError,
    all_kset_masks,
    binom,
    colex_key,
    complement_family,
    derive_r,
    ell_ball,
    lex_compare,
    lex_compare_masks,
    lex_rank,
    lex_segment,
    lex_unrank,
    random_family,
    t_star_union,
)
from .counting import (
    DISJOINT_PAIRS,
    Q_MATCHINGS,
    STATISTICS,
    T_DISJOINT_PAIRS,
    T_INTERSECTING_PAIRS,
    CountReport,
    CoverWitness,
    DegreeProfile,
    StructureReport,
    cross_disjoint_pairs,
    degree_profile,
    disjoint_pairs,
    disjoint_pairs_by_first,
    find_min_cover,
    is_intersecting,
    matchings_meeting,
    partition_by_min_in_cover,
    q_matchings,
    q_matchings_by_first,
    structure_check,
    t_disjoint_pairs,
    t_disjoint_pairs_by_first,
    t_intersecting_pairs,
    t_intersecting_with,
)
from .formulas import (
    BOUND_NAMES,
    BoundReport,
    ThresholdReport,
    evaluate_all,
    lex_disj_formula,
    lower_order_eq2,
    prop21_floor,
    qmatch_lower_eq4_core,
    qmatch_upper_eq3,
    thresholds,
    tstar_heuristic_eq5,
    upper_bound_eq1,
    value_str,
)
from .kneser import (
    KneserGraph,
    Spectrum,
    adjacency_matrix,
    bipartite_part_value,
    export_edge_list,
    induced_edges,
    numeric_eigenvalues,
    spectral_lower_bound,
    spectrum,
)
from .search import (
    DEFAULT_NODE_BUDGET,
    BallValue,
    ConjectureEntry,
    SearchCertificate,
    SearchConfig,
    StarUnionMinimumReport,
    StarUnionPairsReport,
    certify_minimum,
    local_search_improve,
    statistic_value,
    verify_lemma_42,
    verify_lemma_43_44,
    verify_lex_conjecture,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_NAMES",
    "BallValue",
    "BoundReport",
    "ConjectureEntry",
    "ContextError",
    "CountReport",
    "CoverWitness",
    "DEFAULT_NODE_BUDGET",
    "DISJOINT_PAIRS",
    "DegreeProfile",
    "FamilyFormatError",
    "KSet",
    "KneserGraph",
    "NotACoverError",
    "Params",
    "Q_MATCHINGS",
    "RangeError",
    "STATISTICS",
    "SearchCertificate",
    "SearchConfig",
    "SetFamily",
    "ShapeError",
    "Spectrum",
    "StarUnionMinimumReport",
    "StarUnionPairsReport",
    "StructureReport",
    "T_DISJOINT_PAIRS",
    "T_INTERSECTING_PAIRS",
    "ThresholdReport",
    "adjacency_matrix",
    "all_kset_masks",
    "binom",
    "bipartite_part_value",
    "certify_minimum",
    "colex_key",
    "complement_family",
    "cross_disjoint_pairs",
    "degree_profile",
    "derive_r",
    "disjoint_pairs",
    "disjoint_pairs_by_first",
    "ell_ball",
    "evaluate_all",
    "export_edge_list",
    "find_min_cover",
    "induced_edges",
    "is_intersecting",
    "lex_compare",
    "lex_compare_masks",
    "lex_disj_formula",
    "lex_rank",
    "lex_segment",
    "lex_unrank",
    "local_search_improve",
    "lower_order_eq2",
    "matchings_meeting",
    "numeric_eigenvalues",
    "partition_by_min_in_cover",
    "prop21_floor",
    "q_matchings",
    "q_matchings_by_first",
    "qmatch_lower_eq4_core",
    "qmatch_upper_eq3",
    "random_family",
    "spectral_lower_bound",
    "spectrum",
    "statistic_value",
    "structure_check",
    "t_disjoint_pairs",
    "t_disjoint_pairs_by_first",
    "t_intersecting_pairs",
    "t_intersecting_with",
    "t_star_union",
    "thresholds",
    "tstar_heuristic_eq5",
    "upper_bound_eq1",
    "value_str",
    "verify_lemma_42",
    "verify_lemma_43_44",
    "verify_lex_conjecture",
]
