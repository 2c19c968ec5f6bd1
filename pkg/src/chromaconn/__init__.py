"""Exact solvers and verifiers for pattern connection colorings.

The core objects are edge colorings of small graphs together with the four
path patterns (rainbow, proper, monochromatic, conflict-free) and their
connection, k-connection and disconnection variants.  Everything is exact and
certificate producing; solvers return witnesses that verify_certificate can
check independently.
"""

from .coloring import (
    EdgeColoring,
    Pattern,
    canonical_colorings,
    exists_pattern_path,
    path_satisfies,
    restricted_growth_strings,
)
from .graph import (
    Graph,
    Path,
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    connected_graphs_up_to,
    crossing_cut,
    cycle_graph,
    diameter,
    generate,
    is_connected,
    line_graph,
    max_disjoint_paths,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    to_dot,
    write_graph6,
)
from .local import (
    Polynomial,
    chromatic_polynomial,
    edge_chromatic_polynomial,
    evaluate_polynomial,
    four_color_check,
    is_proper_edge_coloring,
    lll_condition,
    nullstellensatz_value,
)
from .solve import (
    Bounds,
    BudgetExceededError,
    SolveResult,
    bounds,
    connection_number,
    count_colorings,
    disconnection_number,
    proper_rainbow_connection_number,
)
from .verify import (
    Certificate,
    PairWitness,
    certificate_from_dict,
    certificate_to_dict,
    is_pattern_connected,
    is_pattern_disconnected,
    is_pattern_k_connected,
    is_proper_rainbow_connected,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "BudgetExceededError",
    "Certificate",
    "EdgeColoring",
    "Graph",
    "PairWitness",
    "Path",
    "Pattern",
    "Polynomial",
    "SolveResult",
    "bounds",
    "build_graph",
    "canonical_colorings",
    "certificate_from_dict",
    "certificate_to_dict",
    "chromatic_polynomial",
    "complete_bipartite_graph",
    "complete_graph",
    "connected_graphs_up_to",
    "connection_number",
    "count_colorings",
    "crossing_cut",
    "cycle_graph",
    "diameter",
    "disconnection_number",
    "edge_chromatic_polynomial",
    "evaluate_polynomial",
    "exists_pattern_path",
    "four_color_check",
    "generate",
    "is_connected",
    "is_pattern_connected",
    "is_pattern_disconnected",
    "is_pattern_k_connected",
    "is_proper_edge_coloring",
    "is_proper_rainbow_connected",
    "line_graph",
    "lll_condition",
    "max_disjoint_paths",
    "nullstellensatz_value",
    "parse_graph6",
    "path_graph",
    "path_satisfies",
    "petersen_graph",
    "proper_rainbow_connection_number",
    "restricted_growth_strings",
    "star_graph",
    "to_dot",
    "verify_certificate",
    "write_graph6",
]
