import json

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.config.settings import Settings
from src.core.graph_builder import (
    build_tgraph,
    degree_sequence,
    edge_count,
    graph_from_json,
    induced_subgraph,
    to_dot,
    to_json,
    verify_edges,
)
from src.models.errors import InvalidParameterError, SizeLimitError
from src.models.group_models import GeneratorBounds

DIHEDRAL4_T2_EDGES = (
    (0, 2), (0, 5), (1, 3), (1, 4), (1, 6), (2, 5), (2, 7), (3, 6), (4, 6), (5, 7),
)


def test_dihedral4_two_graph(make_graph):
    graph = make_graph(2, 4, t=2)
    assert graph.vertex_count == 8
    assert graph.edges == DIHEDRAL4_T2_EDGES
    assert graph.has_edge(5, 0)
    assert not graph.has_edge(0, 1)
    assert not graph.has_edge(3, 3)
    assert verify_edges(graph)


def test_s5_one_graph(make_graph):
    graph = make_graph(2, 3, 4, 5, t=1)
    assert graph.vertex_count == 120
    assert edge_count(graph) == 326


@pytest.mark.parametrize("n", [2, 3, 4, 7, 10])
def test_dihedral_one_graph_edges(make_graph, n):
    assert edge_count(make_graph(2, n, t=1)) == 3 * n - 2


def test_degree_sequence_of_dihedral4(make_graph):
    graph = make_graph(2, 4, t=2)
    assert [graph.degree(v) for v in range(8)] == [2, 3, 3, 2, 2, 3, 3, 2]
    assert degree_sequence(graph) == [2, 2, 2, 2, 3, 3, 3, 3]


def test_t_past_diameter_is_edgeless(make_graph):
    graph = make_graph(2, 4, t=5)
    assert graph.vertex_count == 8
    assert graph.edges == ()
    assert degree_sequence(graph) == [0] * 8


@pytest.mark.parametrize("t", [0, -1, 1.5, True, "2"])
def test_bad_t_rejected(settings, t):
    with pytest.raises(InvalidParameterError):
        build_tgraph(GeneratorBounds.of(2, 4), t, settings)


def test_size_cap_applies(settings):
    with pytest.raises(SizeLimitError):
        build_tgraph(GeneratorBounds.of(10, 10), 1, settings.with_overrides(max_elements=50))


def test_block_size_does_not_change_the_graph(settings):
    bounds = GeneratorBounds.of(3, 4, 5)
    reference = build_tgraph(bounds, 3, settings)
    tiny_blocks = build_tgraph(bounds, 3, settings.with_overrides(build_block_cells=7))
    assert tiny_blocks.edges == reference.edges
    assert tiny_blocks.adjacency == reference.adjacency


@hypothesis_settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=2, max_value=5), min_size=1, max_size=3),
    st.integers(min_value=1, max_value=9),
)
def test_built_edges_are_exactly_distance_t(bounds, t):
    graph = build_tgraph(GeneratorBounds(tuple(bounds)), t, Settings())
    assert verify_edges(graph)
    assert sum(degree_sequence(graph)) == 2 * edge_count(graph)
    assert all(u < v for u, v in graph.edges)
    assert list(graph.edges) == sorted(graph.edges)


def test_induced_subgraph(make_graph):
    graph = make_graph(2, 4, t=2)
    sub = induced_subgraph(graph, [7, 0, 2, 5, 0])
    assert sub.vertices == (0, 2, 5, 7)
    assert sub.edges == ((0, 2), (0, 5), (2, 5), (2, 7), (5, 7))
    assert sub.neighbours(2) == (0, 5, 7)
    with pytest.raises(InvalidParameterError):
        induced_subgraph(graph, [8])


def test_dot_export(make_graph):
    dot = to_dot(make_graph(2, 4, t=2))
    assert dot.startswith("graph tgraph {")
    assert '  7 [label="a^1 b^3"];' in dot
    assert '  0 [label="1"];' in dot
    assert "  0 -- 2;" in dot
    assert dot.count(" -- ") == 10


def test_json_export_and_reload(make_graph, settings):
    graph = make_graph(2, 4, t=2)
    data = json.loads(to_json(graph))
    assert data == {
        "bounds": [2, 4],
        "t": 2,
        "edges": [list(e) for e in DIHEDRAL4_T2_EDGES],
    }
    assert graph_from_json(to_json(graph), settings) == graph


def test_json_reload_rejects_tampering(settings):
    with pytest.raises(InvalidParameterError):
        graph_from_json('{"bounds": [2, 4], "t": 2, "edges": [[0, 1]]}', settings)
    with pytest.raises(InvalidParameterError):
        graph_from_json('{"t": 2}', settings)
    with pytest.raises(InvalidParameterError):
        graph_from_json("not json", settings)
