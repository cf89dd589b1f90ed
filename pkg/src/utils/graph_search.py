"""
Exact backtracking searches on small graphs: vertex colouring and isomorphism.

Graphs are passed as adjacency mappings {vertex: set(neighbours)} so the same
code serves whole t-graphs and single components.
"""

from collections import Counter
from typing import Dict, List, Mapping, Optional, Set

Adjacency = Mapping[int, Set[int]]


def greedy_clique_size(adj: Adjacency) -> int:
    """Size of a clique found greedily; a lower bound on the chromatic number."""
    best = 1 if adj else 0
    by_degree = sorted(adj, key=lambda v: (-len(adj[v]), v))
    for v in by_degree:
        clique = [v]
        for w in sorted(adj[v], key=lambda x: (-len(adj[x]), x)):
            if all(w in adj[u] for u in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best


def find_coloring(adj: Adjacency, colors: int) -> Optional[Dict[int, int]]:
    """
    Proper colouring with at most `colors` colours, or None.

    DSATUR order (most distinct neighbour colours, then degree, then lowest
    index); each vertex takes the lowest admissible colour first and may open
    at most one new colour.
    """
    assignment: Dict[int, int] = {}
    vertices = sorted(adj)

    def pick() -> int:
        best_key = None
        best_vertex = -1
        for v in vertices:
            if v in assignment:
                continue
            saturation = len({assignment[w] for w in adj[v] if w in assignment})
            key = (-saturation, -len(adj[v]), v)
            if best_key is None or key < best_key:
                best_key = key
                best_vertex = v
        return best_vertex

    def solve(max_used: int) -> bool:
        if len(assignment) == len(vertices):
            return True
        v = pick()
        taken = {assignment[w] for w in adj[v] if w in assignment}
        for color in range(min(colors, max_used + 2)):
            if color in taken:
                continue
            assignment[v] = color
            if solve(max(max_used, color)):
                return True
            del assignment[v]
        return False

    if solve(-1):
        return dict(assignment)
    return None


def chromatic_number(adj: Adjacency) -> int:
    """Exact chromatic number of a small graph."""
    if not adj:
        return 0
    if all(not nbrs for nbrs in adj.values()):
        return 1
    k = max(2, greedy_clique_size(adj))
    while find_coloring(adj, k) is None:
        k += 1
    return k


def _refine(adj_a: Adjacency, adj_b: Adjacency) -> Optional[tuple]:
    """
    Joint colour refinement of two graphs.

    Returns the stable colourings, or None when the colour histograms differ
    (the graphs cannot be isomorphic).
    """
    colors_a = {v: len(adj_a[v]) for v in adj_a}
    colors_b = {v: len(adj_b[v]) for v in adj_b}
    classes = -1
    while True:
        sig_a = {v: (colors_a[v], tuple(sorted(colors_a[w] for w in adj_a[v]))) for v in adj_a}
        sig_b = {v: (colors_b[v], tuple(sorted(colors_b[w] for w in adj_b[v]))) for v in adj_b}
        palette = {sig: i for i, sig in enumerate(sorted(set(sig_a.values()) | set(sig_b.values())))}
        colors_a = {v: palette[s] for v, s in sig_a.items()}
        colors_b = {v: palette[s] for v, s in sig_b.items()}
        if Counter(colors_a.values()) != Counter(colors_b.values()):
            return None
        if len(palette) == classes:
            return colors_a, colors_b
        classes = len(palette)


def invariants_match(adj_a: Adjacency, adj_b: Adjacency) -> bool:
    """Cheap necessary conditions: order, size and degree sequence."""
    if len(adj_a) != len(adj_b):
        return False
    degrees_a = sorted(len(n) for n in adj_a.values())
    degrees_b = sorted(len(n) for n in adj_b.values())
    return degrees_a == degrees_b


def are_isomorphic(adj_a: Adjacency, adj_b: Adjacency) -> bool:
    """Backtracking isomorphism test restricted by refined colour classes."""
    if not invariants_match(adj_a, adj_b):
        return False
    if not adj_a:
        return True
    refined = _refine(adj_a, adj_b)
    if refined is None:
        return False
    colors_a, colors_b = refined

    members_b: Dict[int, List[int]] = {}
    for w in sorted(adj_b):
        members_b.setdefault(colors_b[w], []).append(w)
    class_size = Counter(colors_a.values())

    order: List[int] = []
    placed: Set[int] = set()
    while len(order) < len(adj_a):
        v = min(
            (x for x in adj_a if x not in placed),
            key=lambda x: (
                -sum(1 for y in adj_a[x] if y in placed),
                class_size[colors_a[x]],
                x,
            ),
        )
        order.append(v)
        placed.add(v)

    mapping: Dict[int, int] = {}
    used: Set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        mapped_nbrs = [x for x in adj_a[v] if x in mapping]
        for w in members_b[colors_a[v]]:
            if w in used:
                continue
            if any(mapping[x] not in adj_b[w] for x in mapped_nbrs):
                continue
            if sum(1 for y in adj_b[w] if y in used) != len(mapped_nbrs):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)
