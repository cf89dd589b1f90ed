import json
import logging
from typing import Iterable, List, Optional

import numpy as np

from ..config.settings import Settings, get_settings
from ..models.errors import InvalidParameterError
from ..models.graph_models import InducedSubgraph, TGraph
from ..models.group_models import GeneratorBounds
from .metric import d1, distance_block, max_distance
from .presentation import element_at, element_word, exponent_array, make_bounds

logger = logging.getLogger(__name__)


def _check_t(t: int) -> None:
    if isinstance(t, bool) or not isinstance(t, (int, np.integer)):
        raise InvalidParameterError(f"t must be an integer, got {t!r}")
    if t < 1:
        raise InvalidParameterError(f"t must be >= 1, got {t}")


def build_tgraph(
    bounds: GeneratorBounds, t: int, settings: Optional[Settings] = None
) -> TGraph:
    """
    Build the t-graph of a bounds family.

    Args:
        bounds (GeneratorBounds): Exponent bounds.
        t (int): Required distance, any t >= 1.
        settings (Settings, optional): Caps and block size.

    Returns:
        TGraph: Edges sorted lexicographically with u < v.
    """
    settings = settings or get_settings()
    _check_t(t)
    t = int(t)
    coords = exponent_array(bounds, settings)
    order = coords.shape[0]

    us: List[np.ndarray] = []
    vs: List[np.ndarray] = []
    if t <= max_distance(bounds):
        rows_per_block = max(1, settings.build_block_cells // max(order, 1))
        for start in range(0, order, rows_per_block):
            stop = min(order, start + rows_per_block)
            block = distance_block(coords[start:stop], coords)
            rows, cols = np.nonzero(block == t)
            rows = rows + start
            keep = cols > rows
            us.append(rows[keep])
            vs.append(cols[keep])

    if us:
        u_all = np.concatenate(us).tolist()
        v_all = np.concatenate(vs).tolist()
    else:
        u_all, v_all = [], []
    edges = tuple(zip(u_all, v_all))

    adjacency: List[List[int]] = [[] for _ in range(order)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    logger.debug(
        "Built t-graph bounds=%s t=%d: %d vertices, %d edges",
        bounds.bounds,
        t,
        order,
        len(edges),
    )
    return TGraph(
        bounds=bounds,
        t=t,
        edges=edges,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def edge_count(graph: TGraph) -> int:
    return len(graph.edges)


def degree_sequence(graph: TGraph) -> List[int]:
    """Vertex degrees in ascending order; they sum to 2|E|."""
    return sorted(graph.degree(v) for v in range(graph.vertex_count))


def induced_subgraph(graph: TGraph, vertices: Iterable[int]) -> InducedSubgraph:
    """Edges of the graph with both endpoints in the given vertex subset."""
    subset = sorted(set(int(v) for v in vertices))
    for v in subset:
        if not 0 <= v < graph.vertex_count:
            raise InvalidParameterError(
                f"Vertex {v} out of range for {graph.vertex_count} vertices"
            )
    members = set(subset)
    edges = tuple((u, v) for u, v in graph.edges if u in members and v in members)
    return InducedSubgraph(parent=graph, vertices=tuple(subset), edges=edges)


def verify_edges(graph: TGraph) -> bool:
    """Exhaustively re-check that the edge set is exactly the distance-t pairs."""
    order = graph.vertex_count
    elements = [element_at(graph.bounds, i) for i in range(order)]
    edge_set = set(graph.edges)
    for u in range(order):
        for v in range(u + 1, order):
            if (d1(elements[u], elements[v]) == graph.t) != ((u, v) in edge_set):
                return False
    for u, nbrs in enumerate(graph.adjacency):
        for v in nbrs:
            if (min(u, v), max(u, v)) not in edge_set:
                return False
    return sum(len(n) for n in graph.adjacency) == 2 * len(edge_set)


def to_dot(graph: TGraph) -> str:
    """Undirected DOT text, vertices labelled with their normal-form word."""
    lines = [
        "graph tgraph {",
        f'  graph [comment="bounds={",".join(str(b) for b in graph.bounds.bounds)} t={graph.t}"];',
    ]
    for index in range(graph.vertex_count):
        word = element_word(element_at(graph.bounds, index))
        lines.append(f'  {index} [label="{word}"];')
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: TGraph, indent: Optional[int] = None) -> str:
    return graph.to_json(indent=indent)


def graph_from_json(text: str, settings: Optional[Settings] = None) -> TGraph:
    """Rebuild a TGraph from its JSON export and check the stored edges."""
    try:
        data = json.loads(text)
        bounds = make_bounds(data["bounds"], settings)
        t = data["t"]
        stored = [tuple(e) for e in data.get("edges", [])]
    except (KeyError, TypeError, json.JSONDecodeError) as parse_err:
        raise InvalidParameterError(f"Malformed t-graph JSON: {parse_err}")
    graph = build_tgraph(bounds, t, settings)
    if stored != list(graph.edges):
        raise InvalidParameterError("Stored edges do not match the bounds and t")
    return graph
