"""Maximum-cardinality matching for general graphs.

Phase-structured minimum-length augmenting-path search with double
depth-first search and petal/bud bookkeeping, plus a brute-force
structural oracle for small instances.
"""

from .graph import (
    AlternatingPath,
    Graph,
    GraphFormatError,
    MatchingState,
    augment,
    generate_random_graph,
    parse_dimacs,
    parse_matching,
    serialize_dimacs,
    serialize_matching,
    validate_matching,
)
from .phase import PhaseResult, run_phase
from .solver import maximum_matching

__all__ = [
    "AlternatingPath",
    "Graph",
    "GraphFormatError",
    "MatchingState",
    "PhaseResult",
    "augment",
    "generate_random_graph",
    "maximum_matching",
    "parse_dimacs",
    "parse_matching",
    "run_phase",
    "serialize_dimacs",
    "serialize_matching",
    "validate_matching",
]

__version__ = "0.1.0"
