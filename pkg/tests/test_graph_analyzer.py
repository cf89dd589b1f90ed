import logging

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.config.settings import Settings
from src.core.graph_analyzer import GraphAnalyzer, _reflect, _reflection_masks
from src.core.graph_builder import build_tgraph
from src.core.metric import d1
from src.core.presentation import element_at, enumerate_elements, index_of
from src.models.errors import InvalidParameterError, OracleDivergenceError, SizeLimitError
from src.models.graph_models import ComponentKind
from src.models.group_models import GeneratorBounds, GroupElement
from src.utils.exact_rank import RankResult

small_graphs = st.tuples(
    st.lists(st.integers(min_value=2, max_value=4), min_size=1, max_size=3),
    st.integers(min_value=1, max_value=8),
)


@hypothesis_settings(max_examples=30, deadline=None)
@given(small_graphs)
def test_component_count_equals_laplacian_nullity(params):
    bounds, t = params
    graph = build_tgraph(GeneratorBounds(tuple(bounds)), t, Settings())
    analyzer = GraphAnalyzer(Settings())
    k, nullity, method = analyzer.certified_component_count(graph)
    assert k == nullity == len(analyzer.connected_components(graph))
    assert method == "bareiss"


@hypothesis_settings(max_examples=30, deadline=None)
@given(small_graphs, st.data())
def test_box_reflections_are_automorphisms(params, data):
    bounds, t = params
    graph = build_tgraph(GeneratorBounds(tuple(bounds)), t, Settings())
    mask = data.draw(st.sampled_from(_reflection_masks(graph.bounds.rank)))
    image = {
        tuple(sorted((_reflect(graph, u, mask), _reflect(graph, v, mask))))
        for u, v in graph.edges
    }
    assert image == set(graph.edges)


def test_components_of_dihedral4(analyzer, make_graph):
    graph = make_graph(2, 4, t=2)
    assert analyzer.connected_components(graph) == [[0, 2, 5, 7], [1, 3, 4, 6]]
    assert analyzer.certified_component_count(graph) == (2, 2, "bareiss")


def test_laplacian_rows_sum_to_zero(analyzer, make_graph):
    matrix = analyzer.laplacian(make_graph(2, 4, t=2))
    assert matrix.order == 8
    assert all(sum(row) == 0 for row in matrix.to_lists())
    assert matrix.row(0) == (2, 0, -1, 0, 0, -1, 0, 0)
    assert analyzer.laplacian_nullity(matrix) == 2


def test_modular_rank_path_above_exact_order(make_graph):
    analyzer = GraphAnalyzer(Settings(exact_rank_max_order=4))
    assert analyzer.certified_component_count(make_graph(2, 4, t=2)) == (2, 2, "modular")


def test_spectral_cap(make_graph):
    analyzer = GraphAnalyzer(Settings(spectral_max_order=4))
    with pytest.raises(SizeLimitError):
        analyzer.laplacian(make_graph(2, 4, t=2))


def test_nullity_disagreement_raises(analyzer, make_graph, mocker):
    mocker.patch.object(analyzer, "laplacian_rank", return_value=RankResult(8, "bareiss"))
    with pytest.raises(OracleDivergenceError):
        analyzer.certified_component_count(make_graph(2, 4, t=2))


def test_disagreeing_primes_only_warn(analyzer, make_graph, mocker, caplog):
    mocker.patch.object(
        analyzer,
        "laplacian_rank",
        return_value=RankResult(6, "modular", modular_ranks=(6, 5)),
    )
    with caplog.at_level(logging.WARNING):
        assert analyzer.certified_component_count(make_graph(2, 4, t=2)) == (2, 2, "modular")
    assert "disagree" in caplog.text


def test_bipartite_grid(analyzer, make_graph):
    result = analyzer.is_bipartite(make_graph(3, 4, t=1))
    assert result
    assert result.coloring[0] != result.coloring[1]


def test_odd_cycle_witness(analyzer, make_graph):
    graph = make_graph(2, 4, t=2)
    result = analyzer.is_bipartite(graph)
    assert not result
    cycle = result.odd_cycle
    assert len(cycle) % 2 == 1
    assert len(set(cycle)) == len(cycle)
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert graph.has_edge(a, b)


@pytest.mark.parametrize(
    "bounds, t, chi",
    [
        ((2, 4), 2, 3),
        ((2, 4), 5, 1),
        ((2, 5), 3, 2),
        ((2, 7), 4, 3),
        ((3, 3), 1, 2),
    ],
)
def test_chromatic_number(analyzer, make_graph, bounds, t, chi):
    assert analyzer.chromatic_number(make_graph(*bounds, t=t)) == chi


def test_chromatic_cap_skips_bipartite_components(make_graph):
    analyzer = GraphAnalyzer(Settings(chromatic_max_component=3))
    assert analyzer.chromatic_number(make_graph(4, 4, t=1)) == 2
    with pytest.raises(SizeLimitError):
        analyzer.chromatic_number(make_graph(2, 4, t=2))


def test_classification_of_dihedral4_n_graph(analyzer, make_graph):
    components = analyzer.classify_components(make_graph(2, 4, t=4))
    assert len(components) == 6
    kinds = sorted(c.descriptor() for c in components)
    assert kinds == [("isolated", 1)] * 4 + [("path", 2)] * 2


def test_cycle_classification(analyzer, make_graph):
    assert [c.descriptor() for c in analyzer.classify_components(make_graph(2, 5, t=3))] == [
        ("cycle", 10)
    ]
    kinds = [c.kind for c in analyzer.classify_components(make_graph(2, 7, t=4))]
    assert kinds == [ComponentKind.CYCLE, ComponentKind.CYCLE]


def test_components_isomorphic_by_reflection(analyzer, make_graph):
    graph = make_graph(2, 4, t=2)
    assert analyzer.components_isomorphic(graph, [0, 2, 5, 7], [1, 3, 4, 6])


def test_components_isomorphic_rejects(analyzer, make_graph):
    graph = make_graph(2, 4, t=4)
    assert not analyzer.components_isomorphic(graph, [0], [3, 4])
    with pytest.raises(InvalidParameterError):
        analyzer.components_isomorphic(graph, [0], [99])


def test_components_isomorphic_backtracking(make_graph):
    graph = make_graph(2, 4, t=2)
    # a diamond plus a stray vertex on each side, not related by any reflection
    first, second = [0, 1, 2, 5, 7], [0, 1, 3, 4, 6]
    assert GraphAnalyzer(Settings()).components_isomorphic(graph, first, second)
    with pytest.raises(SizeLimitError):
        GraphAnalyzer(Settings(isomorphism_max_vertices=4)).components_isomorphic(
            graph, first, second
        )


def test_parity_bipartition(make_graph):
    even, odd = GraphAnalyzer.parity_bipartition(make_graph(2, 4, t=2))
    assert even == [0, 2, 5, 7]
    assert odd == [1, 3, 4, 6]
    with pytest.raises(InvalidParameterError):
        GraphAnalyzer.parity_bipartition(make_graph(2, 2, 2, t=2))


def test_involution_image():
    bounds = GeneratorBounds.of(2, 6)
    image = GraphAnalyzer.involution_image(GroupElement(bounds, (0, 4)))
    assert image.exponents == (1, 4)
    with pytest.raises(InvalidParameterError):
        GraphAnalyzer.involution_image(GroupElement(GeneratorBounds.of(3, 6), (0, 4)))


def test_involution_is_its_own_inverse(settings):
    for element in enumerate_elements(GeneratorBounds.of(2, 9), settings):
        twice = GraphAnalyzer.involution_image(GraphAnalyzer.involution_image(element))
        assert twice == element


def test_involution_preserves_distance(settings):
    elements = enumerate_elements(GeneratorBounds.of(2, 6), settings)
    for x in elements:
        fx = GraphAnalyzer.involution_image(x)
        for y in elements:
            assert d1(fx, GraphAnalyzer.involution_image(y)) == d1(x, y)


@pytest.mark.parametrize("n", range(2, 13))
def test_involution_maps_edges_onto_edges(make_graph, n):
    for t in range(1, n + 2):
        graph = make_graph(2, n, t=t)

        def image(v):
            return index_of(GraphAnalyzer.involution_image(element_at(graph.bounds, v)))

        mapped = {tuple(sorted((image(u), image(v)))) for u, v in graph.edges}
        assert mapped == set(graph.edges)


@pytest.mark.parametrize("n", range(2, 13))
def test_dihedral_bounds_colouring_sweep(analyzer, make_graph, n):
    for t in range(1, n + 2):
        graph = make_graph(2, n, t=t)
        result = analyzer.is_bipartite(graph)
        chi = analyzer.chromatic_number(graph)
        assert (chi >= 3) == (not result.bipartite and bool(graph.edges))
        if result:
            assert all(result.coloring[u] != result.coloring[v] for u, v in graph.edges)
        if t % 2 == 0:
            even, _ = GraphAnalyzer.parity_bipartition(graph)
            even_set = set(even)
            assert all((u in even_set) == (v in even_set) for u, v in graph.edges)


def test_analyze_report(analyzer, make_graph):
    report = analyzer.analyze(make_graph(2, 4, t=2))
    data = report.to_dict()
    assert data["k"] == 2
    assert data["nullity"] == 2
    assert data["edges"] == 10
    assert data["bipartite"] is False
    assert data["chi"] == 3
    assert data["isolated"] == 0


def test_analyze_survives_colouring_cap(make_graph, caplog):
    analyzer = GraphAnalyzer(Settings(chromatic_max_component=3))
    with caplog.at_level(logging.WARNING):
        report = analyzer.analyze(make_graph(2, 4, t=2))
    assert report.chromatic_number is None
    assert report.component_count == 2
    assert "Chromatic number not computed" in caplog.text
