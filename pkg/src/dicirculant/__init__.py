"""Cayley graphs on dicyclic groups: construction, distance-regularity
testing, classification, and exhaustive desk-scale surveys."""

from .cayley import ConnectionSpec, Graph, build_graph, canonicalize, parse_spec, validate_spec
from .classifier import Classification, classify, condition_iii, condition_iii_prime
from .metrics import IntersectionArray, is_distance_regular
from .search import enumerate_specs, search_difference_sets, survey

__all__ = [
    "ConnectionSpec", "Graph", "build_graph", "canonicalize", "parse_spec",
    "validate_spec", "Classification", "classify", "condition_iii",
    "condition_iii_prime", "IntersectionArray", "is_distance_regular",
    "enumerate_specs", "search_difference_sets", "survey",
]

__version__ = "0.1.0"
