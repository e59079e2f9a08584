"""Exact independence, matching and critical-difference invariants.

Bipartite and almost-bipartite graphs (exactly one odd cycle) go through
structural fast paths; everything else, and every fast path, is backed by
brute-force oracles for small graphs.
"""

from .critical import (
    critical_difference,
    critical_independent_sets,
    find_critical_independent_set,
    find_critical_set,
    independence_difference,
    ker,
)
from .errors import (
    EdgeListError,
    GraphError,
    InternalStructureViolation,
    NotBipartiteError,
    OddcoreError,
    TooLargeError,
    UnknownFixtureError,
)
from .generators import fixture
from .graph import (
    Graph,
    closed_neighborhood,
    difference,
    format_edge_list,
    induced,
    neighborhood,
    parse_edge_list,
    remove_edge,
    remove_vertices,
)
from .independence import core, corona, independence_number, is_konig_egervary
from .matching import Matching, matching_from_into, matching_number, maximum_matching
from .oracle import OracleBounds
from .structure import ClassTag, classify, decompose

__version__ = "0.1.0"

__all__ = [
    "ClassTag",
    "EdgeListError",
    "Graph",
    "GraphError",
    "InternalStructureViolation",
    "Matching",
    "NotBipartiteError",
    "OddcoreError",
    "OracleBounds",
    "TooLargeError",
    "UnknownFixtureError",
    "classify",
    "closed_neighborhood",
    "core",
    "corona",
    "critical_difference",
    "critical_independent_sets",
    "decompose",
    "difference",
    "find_critical_independent_set",
    "find_critical_set",
    "fixture",
    "format_edge_list",
    "independence_difference",
    "independence_number",
    "induced",
    "is_konig_egervary",
    "ker",
    "matching_from_into",
    "matching_number",
    "maximum_matching",
    "neighborhood",
    "parse_edge_list",
    "remove_edge",
    "remove_vertices",
]
