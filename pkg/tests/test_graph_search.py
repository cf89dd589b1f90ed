from itertools import combinations

import pytest

from src.utils.graph_search import (
    are_isomorphic,
    chromatic_number,
    find_coloring,
    greedy_clique_size,
    invariants_match,
)


def _graph(size, edges):
    adj = {v: set() for v in range(size)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _cycle(size, offset=0):
    return [(offset + i, offset + (i + 1) % size) for i in range(size)]


def _petersen():
    outer = _cycle(5)
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _graph(10, outer + spokes + inner)


@pytest.mark.parametrize(
    "adj, chi",
    [
        ({}, 0),
        (_graph(3, []), 1),
        (_graph(4, list(combinations(range(4), 2))), 4),
        (_graph(5, _cycle(5)), 3),
        (_graph(6, _cycle(6)), 2),
        (_petersen(), 3),
    ],
)
def test_chromatic_number(adj, chi):
    assert chromatic_number(adj) == chi


def test_find_coloring_is_proper():
    adj = _petersen()
    coloring = find_coloring(adj, 3)
    assert set(coloring) == set(adj)
    assert all(coloring[u] != coloring[v] for u in adj for v in adj[u])
    assert find_coloring(adj, 2) is None


def test_greedy_clique_is_a_lower_bound():
    adj = _graph(5, list(combinations(range(4), 2)) + [(3, 4)])
    assert greedy_clique_size(adj) == 4


def test_cycle_vs_two_triangles():
    six_cycle = _graph(6, _cycle(6))
    triangles = _graph(6, _cycle(3) + _cycle(3, offset=3))
    assert invariants_match(six_cycle, triangles)
    assert not are_isomorphic(six_cycle, triangles)


def test_relabelled_petersen_is_isomorphic():
    adj = _petersen()
    relabel = {v: (3 * v + 7) % 10 for v in adj}
    shuffled = {relabel[v]: {relabel[w] for w in nbrs} for v, nbrs in adj.items()}
    assert are_isomorphic(adj, shuffled)


def test_different_degree_sequences():
    assert not are_isomorphic(_graph(4, _cycle(4)), _graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert are_isomorphic({}, {})
