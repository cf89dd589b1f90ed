import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .group_models import GeneratorBounds

Edge = Tuple[int, int]


@dataclass(frozen=True)
class TGraph:
    """
    The t-graph of a bounds family.

    Vertices are the lexicographic indices of the elements; an edge {u, v}
    (stored with u < v) joins two elements at d1-distance exactly t.
    """

    bounds: GeneratorBounds
    t: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return v in self.adjacency[u]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bounds": self.bounds.to_list(),
            "t": self.t,
            "edges": [[u, v] for u, v in self.edges],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


@dataclass(frozen=True)
class InducedSubgraph:
    """Edges of a parent TGraph with both endpoints inside a vertex subset."""

    parent: TGraph
    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        members = set(self.vertices)
        return tuple(w for w in self.parent.adjacency[vertex] if w in members)


@dataclass(frozen=True)
class LaplacianMatrix:
    """Degree matrix minus adjacency matrix, exact integers."""

    order: int
    entries: Tuple[Tuple[int, ...], ...]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i]

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


class ComponentKind(str, Enum):
    ISOLATED = "isolated"
    PATH = "path"
    CYCLE = "cycle"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentClassification:
    kind: ComponentKind
    vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def descriptor(self) -> Tuple[str, int]:
        return (self.kind.value, self.size)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "size": self.size}


@dataclass(frozen=True)
class BipartiteResult:
    """
    Outcome of a 2-colouring attempt.

    Either a proper colouring (values 0/1 indexed by vertex) or an odd cycle
    given as a vertex sequence whose consecutive entries, and last/first, are
    adjacent.
    """

    bipartite: bool
    coloring: Optional[Tuple[int, ...]] = None
    odd_cycle: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.bipartite


@dataclass
class AnalysisReport:
    """
    Ground-truth structure of one t-graph.
    """

    bounds: GeneratorBounds
    t: int
    vertex_count: int
    edge_count: int
    component_count: int
    laplacian_nullity: int
    components: List[ComponentClassification] = field(default_factory=list)
    isolated_count: int = 0
    bipartite: bool = True
    chromatic_number: Optional[int] = None
    nullity_method: str = "bareiss"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bounds": self.bounds.to_list(),
            "t": self.t,
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "k": self.component_count,
            "nullity": self.laplacian_nullity,
            "nullity_method": self.nullity_method,
            "bipartite": self.bipartite,
            "chi": self.chromatic_number,
            "isolated": self.isolated_count,
            "components": [c.to_dict() for c in self.components],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)
