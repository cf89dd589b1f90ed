import logging
from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..config.settings import Settings, get_settings
from ..models.errors import InvalidParameterError, OracleDivergenceError, SizeLimitError
from ..models.graph_models import (
    AnalysisReport,
    BipartiteResult,
    ComponentClassification,
    ComponentKind,
    LaplacianMatrix,
    TGraph,
)
from ..models.group_models import GroupElement
from ..utils.disjoint_set import DisjointSet
from ..utils.exact_rank import RankResult, exact_rank
from ..utils.graph_search import are_isomorphic, chromatic_number, invariants_match
from .presentation import element_at, index_of

logger = logging.getLogger(__name__)


class GraphAnalyzer:
    """
    Ground-truth structure of t-graphs.

    Component counts come from two independent routes (union-find and the
    exact nullity of the Laplacian); colouring and isomorphism use exact
    backtracking under configured vertex caps.

    Attributes:
        settings (Settings): Resource caps.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    @staticmethod
    def connected_components(graph: TGraph) -> List[List[int]]:
        """Vertex blocks of the graph, ordered by smallest member."""
        dsu = DisjointSet(graph.vertex_count)
        for u, v in graph.edges:
            dsu.union(u, v)
        return dsu.blocks()

    def laplacian(self, graph: TGraph) -> LaplacianMatrix:
        """Degree matrix minus adjacency matrix."""
        order = graph.vertex_count
        if order > self.settings.spectral_max_order:
            raise SizeLimitError(
                f"Laplacian of order {order} exceeds cap "
                f"{self.settings.spectral_max_order}"
            )
        rows = [[0] * order for _ in range(order)]
        for u, nbrs in enumerate(graph.adjacency):
            rows[u][u] = len(nbrs)
            for v in nbrs:
                rows[u][v] = -1
        return LaplacianMatrix(order=order, entries=tuple(tuple(r) for r in rows))

    def laplacian_rank(self, matrix: LaplacianMatrix) -> RankResult:
        logger.debug(
            "Rank of order-%d Laplacian via %s",
            matrix.order,
            "bareiss" if matrix.order <= self.settings.exact_rank_max_order else "modular",
        )
        return exact_rank(matrix.entries, self.settings.exact_rank_max_order)

    def laplacian_nullity(self, matrix: LaplacianMatrix) -> int:
        """Multiplicity of the eigenvalue 0: order − rank over Q."""
        return matrix.order - self.laplacian_rank(matrix).rank

    def certified_component_count(self, graph: TGraph) -> Tuple[int, int, str]:
        """
        Union-find component count checked against the Laplacian nullity.

        The component indicator vectors lie in the kernel, so k <= nullity
        over Q <= nullity mod p; a modular nullity equal to k is exact.

        Returns:
            (k, nullity, method). Raises OracleDivergenceError when they differ.
        """
        k = len(self.connected_components(graph))
        result = self.laplacian_rank(self.laplacian(graph))
        nullity = graph.vertex_count - result.rank
        if result.method == "modular" and len(set(result.modular_ranks)) != 1:
            logger.warning(
                "Modular ranks %s disagree for bounds=%s t=%d",
                result.modular_ranks,
                graph.bounds.bounds,
                graph.t,
            )
        if nullity != k:
            raise OracleDivergenceError(
                f"Union-find finds {k} components but Laplacian nullity is "
                f"{nullity} for bounds={graph.bounds.bounds} t={graph.t}"
            )
        return k, nullity, result.method

    @staticmethod
    def is_bipartite(graph: TGraph) -> BipartiteResult:
        """
        BFS 2-colouring.

        On failure the witness is an odd cycle through the two equally
        coloured endpoints of the offending edge and their BFS ancestors.
        """
        color: List[int] = [-1] * graph.vertex_count
        parent: List[int] = [-1] * graph.vertex_count
        depth: List[int] = [0] * graph.vertex_count
        for root in range(graph.vertex_count):
            if color[root] != -1:
                continue
            color[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in graph.adjacency[u]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        parent[v] = u
                        depth[v] = depth[u] + 1
                        queue.append(v)
                    elif color[v] == color[u]:
                        return BipartiteResult(
                            bipartite=False,
                            odd_cycle=_odd_cycle(u, v, parent, depth),
                        )
        return BipartiteResult(bipartite=True, coloring=tuple(color))

    @staticmethod
    def _component_adjacency(graph: TGraph, block: Iterable[int]) -> Dict[int, Set[int]]:
        members = set(block)
        return {v: {w for w in graph.adjacency[v] if w in members} for v in members}

    def chromatic_number(self, graph: TGraph) -> int:
        """
        Exact chromatic number, component by component.

        Bipartite components need no search; the vertex cap applies to the
        others.
        """
        if graph.vertex_count == 0:
            return 0
        if not graph.edges:
            return 1
        best = 1
        for block in self.connected_components(graph):
            if len(block) == 1:
                continue
            adj = self._component_adjacency(graph, block)
            if _is_two_colourable(adj):
                best = max(best, 2)
                continue
            if len(block) > self.settings.chromatic_max_component:
                raise SizeLimitError(
                    f"Component with {len(block)} vertices exceeds colouring cap "
                    f"{self.settings.chromatic_max_component}"
                )
            best = max(best, chromatic_number(adj))
        return best

    def classify_components(self, graph: TGraph) -> List[ComponentClassification]:
        """Tag each component as isolated, path, cycle or other."""
        return [
            ComponentClassification(kind=_kind_of(self._component_adjacency(graph, block)), vertices=tuple(block))
            for block in self.connected_components(graph)
        ]

    def components_isomorphic(
        self, graph: TGraph, block_a: Sequence[int], block_b: Sequence[int]
    ) -> bool:
        """
        Whether the subgraphs induced on two vertex blocks are isomorphic.

        Order is: invariant rejection, path/cycle/isolated shapes, exponent-box
        reflections (isometries of d1, hence automorphisms of the t-graph),
        then the capped backtracking matcher.
        """
        for v in list(block_a) + list(block_b):
            if not 0 <= v < graph.vertex_count:
                raise InvalidParameterError(
                    f"Vertex {v} out of range for {graph.vertex_count} vertices"
                )
        adj_a = self._component_adjacency(graph, block_a)
        adj_b = self._component_adjacency(graph, block_b)
        if not invariants_match(adj_a, adj_b):
            return False

        simple = (ComponentKind.ISOLATED, ComponentKind.PATH, ComponentKind.CYCLE)
        kind_a, kind_b = _kind_of(adj_a), _kind_of(adj_b)
        if kind_a in simple and kind_b in simple:
            return kind_a == kind_b

        target = set(adj_b)
        for flipped in _reflection_masks(graph.bounds.rank):
            if {_reflect(graph, v, flipped) for v in adj_a} == target:
                return True

        if len(adj_a) > self.settings.isomorphism_max_vertices:
            raise SizeLimitError(
                f"Blocks of {len(adj_a)} vertices exceed isomorphism cap "
                f"{self.settings.isomorphism_max_vertices}"
            )
        return are_isomorphic(adj_a, adj_b)

    @staticmethod
    def parity_bipartition(graph: TGraph) -> Tuple[List[int], List[int]]:
        """Split the vertices of a 2-generator graph by the parity of i + j."""
        if graph.bounds.rank != 2:
            raise InvalidParameterError(
                f"Parity bipartition needs 2 generators, got {graph.bounds.rank}"
            )
        even: List[int] = []
        odd: List[int] = []
        for index in range(graph.vertex_count):
            exps = element_at(graph.bounds, index).exponents
            (even if sum(exps) % 2 == 0 else odd).append(index)
        return even, odd

    @staticmethod
    def involution_image(element: GroupElement) -> GroupElement:
        """(i, j) -> (1 − i, j) on bounds (2, n)."""
        bounds = element.bounds
        if bounds.rank != 2 or bounds.bounds[0] != 2:
            raise InvalidParameterError(
                f"Involution needs bounds (2, n), got {bounds.bounds}"
            )
        i, j = element.exponents
        return GroupElement(bounds, (1 - i, j))

    def analyze(self, graph: TGraph) -> AnalysisReport:
        """Full report with the union-find / nullity cross-check."""
        k, nullity, method = self.certified_component_count(graph)
        components = self.classify_components(graph)
        bipartite = self.is_bipartite(graph).bipartite
        try:
            chi: Optional[int] = self.chromatic_number(graph)
        except SizeLimitError as cap_err:
            logger.warning("Chromatic number not computed: %s", cap_err)
            chi = None
        return AnalysisReport(
            bounds=graph.bounds,
            t=graph.t,
            vertex_count=graph.vertex_count,
            edge_count=len(graph.edges),
            component_count=k,
            laplacian_nullity=nullity,
            components=components,
            isolated_count=sum(1 for c in components if c.kind is ComponentKind.ISOLATED),
            bipartite=bipartite,
            chromatic_number=chi,
            nullity_method=method,
        )


def _odd_cycle(u: int, v: int, parent: List[int], depth: List[int]) -> Tuple[int, ...]:
    left = [u]
    right = [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor, right repeats it
    return tuple(left + right[-2::-1])


def _is_two_colourable(adj: Dict[int, Set[int]]) -> bool:
    color: Dict[int, int] = {}
    for root in sorted(adj):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _is_connected(adj: Dict[int, Set[int]]) -> bool:
    if not adj:
        return True
    start = min(adj)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _kind_of(adj: Dict[int, Set[int]]) -> ComponentKind:
    size = len(adj)
    degrees = [len(n) for n in adj.values()]
    edges = sum(degrees) // 2
    if size == 1:
        return ComponentKind.ISOLATED
    if not _is_connected(adj):
        return ComponentKind.OTHER
    if edges == size - 1 and max(degrees) <= 2:
        return ComponentKind.PATH
    if size >= 3 and all(d == 2 for d in degrees):
        return ComponentKind.CYCLE
    return ComponentKind.OTHER


def _reflection_masks(rank: int) -> List[Tuple[int, ...]]:
    masks: List[Tuple[int, ...]] = [()]
    for size in range(1, rank + 1):
        masks.extend(combinations(range(rank), size))
    return masks


def _reflect(graph: TGraph, vertex: int, flipped: Tuple[int, ...]) -> int:
    element = element_at(graph.bounds, vertex)
    exps = list(element.exponents)
    for i in flipped:
        exps[i] = graph.bounds.bounds[i] - 1 - exps[i]
    return index_of(GroupElement(graph.bounds, tuple(exps)))
