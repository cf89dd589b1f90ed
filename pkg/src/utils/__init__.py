from .disjoint_set import DisjointSet, components_from_edges
from .exact_rank import RankResult, bareiss_rank, exact_rank, modular_rank
from .file_handler import FileHandler
from .fixture_loader import FixtureLoader
from .graph_search import are_isomorphic, chromatic_number, find_coloring

__all__ = [
    "DisjointSet",
    "components_from_edges",
    "RankResult",
    "bareiss_rank",
    "exact_rank",
    "modular_rank",
    "FileHandler",
    "FixtureLoader",
    "are_isomorphic",
    "chromatic_number",
    "find_coloring",
]
