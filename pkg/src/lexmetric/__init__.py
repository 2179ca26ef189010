"""Finite metric spaces, lexicographic products, and exact metric dimension."""

from .space import (
    DEFAULT_TOLERANCE,
    FiniteMetricSpace,
    SpaceStats,
    ValidationReport,
    Violation,
    ball,
    diameter,
    load_space,
    nearness,
    nearness_point,
    save_space,
    slack,
    space_from_json,
    space_stats,
    space_to_json,
    validate,
)
from .construct import (
    DisconnectedGraphError,
    Graph,
    ProductSpace,
    complete_graph,
    cycle_graph,
    discrete_metric,
    fiber,
    graph_metric,
    gravitational,
    lexicographic,
    load_graph,
    parse_edge_list,
    path_graph,
    squash,
)
from .resolving import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    PairTable,
    ResolveResult,
    coordinates,
    greedy_generator,
    metric_dimension,
    pair_table,
    resolves,
)
from .twins import (
    BasisCheck,
    SpecialClassSet,
    TwinPartition,
    is_twins_free,
    special_classes,
    twin_classes,
)
from .theory import (
    DEFAULT_PRODUCT_CAP,
    SizeGuardExceeded,
    VerificationReport,
    connected_graph_spaces,
    fiber_dimensions,
    formula_rhs,
    random_connected_graph,
    random_metric_space,
    random_pairs,
    verify_all,
    verify_corollaries,
    verify_diameter,
    verify_dimension,
    verify_squash,
    weighted_corpus_spaces,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_PRODUCT_CAP",
    "DEFAULT_TOLERANCE",
    "BasisCheck",
    "DisconnectedGraphError",
    "EnumerationCapExceeded",
    "FiniteMetricSpace",
    "Graph",
    "PairTable",
    "ProductSpace",
    "ResolveResult",
    "SizeGuardExceeded",
    "SpaceStats",
    "SpecialClassSet",
    "TwinPartition",
    "ValidationReport",
    "VerificationReport",
    "Violation",
    "ball",
    "complete_graph",
    "connected_graph_spaces",
    "coordinates",
    "cycle_graph",
    "diameter",
    "discrete_metric",
    "fiber",
    "fiber_dimensions",
    "formula_rhs",
    "graph_metric",
    "gravitational",
    "greedy_generator",
    "is_twins_free",
    "lexicographic",
    "load_graph",
    "load_space",
    "metric_dimension",
    "nearness",
    "nearness_point",
    "pair_table",
    "parse_edge_list",
    "path_graph",
    "random_connected_graph",
    "random_metric_space",
    "random_pairs",
    "resolves",
    "save_space",
    "slack",
    "space_from_json",
    "space_stats",
    "space_to_json",
    "special_classes",
    "squash",
    "twin_classes",
    "validate",
    "verify_all",
    "verify_corollaries",
    "verify_diameter",
    "verify_dimension",
    "verify_squash",
    "weighted_corpus_spaces",
]
