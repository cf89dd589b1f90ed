from .graph_analyzer import GraphAnalyzer
from .graph_builder import build_tgraph, degree_sequence, induced_subgraph, to_dot, to_json
from .harness import CLAIMS, VerificationHarness
from .metric import d1, distance_matrix, max_distance
from .presentation import element_at, enumerate_elements, index_of, parse_group_spec

__all__ = [
    "GraphAnalyzer",
    "build_tgraph",
    "degree_sequence",
    "induced_subgraph",
    "to_dot",
    "to_json",
    "CLAIMS",
    "VerificationHarness",
    "d1",
    "distance_matrix",
    "max_distance",
    "element_at",
    "enumerate_elements",
    "index_of",
    "parse_group_spec",
]
