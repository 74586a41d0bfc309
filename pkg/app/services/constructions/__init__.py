from app.services.constructions.bipartite import (
    bipartite_expected_colors,
    bipartite_regular_labeling,
)
from app.services.constructions.cycle import cycle_labeling, cycle_pattern
from app.services.constructions.lexicographic import (
    check_lex_conditions,
    check_lex_profile,
    lex_labeling,
    lex_vertex_sum,
)
from app.services.constructions.tripartite import (
    TrailDecomposition,
    TripartiteStructure,
    trail_decomposition,
    tripartite_labeling,
    validate_tripartite,
)

__all__ = [
    "TrailDecomposition",
    "TripartiteStructure",
    "bipartite_expected_colors",
    "bipartite_regular_labeling",
    "check_lex_conditions",
    "check_lex_profile",
    "cycle_labeling",
    "cycle_pattern",
    "lex_labeling",
    "lex_vertex_sum",
    "trail_decomposition",
    "tripartite_labeling",
    "validate_tripartite",
]
