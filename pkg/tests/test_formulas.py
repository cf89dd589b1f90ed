import pytest

from src.core import formulas
from src.models.errors import InvalidParameterError
from src.models.group_models import GeneratorBounds, NamedGroup


@pytest.mark.parametrize(
    "m, n, threshold", [(2, 2, 1), (2, 4, 2), (2, 5, 3), (3, 3, 2), (4, 7, 5), (15, 15, 14)]
)
def test_threshold_general(m, n, threshold):
    assert formulas.threshold_general(m, n) == threshold


def test_other_thresholds():
    assert [formulas.threshold_dihedral(n) for n in (2, 3, 4, 7)] == [1, 2, 2, 4]
    assert formulas.threshold_ngen(GeneratorBounds.of(2, 3, 4, 5)) == 5
    assert formulas.threshold_ngen(GeneratorBounds.of(3, 3, 3)) == 3


def test_two_generator_parity():
    assert formulas.predict_components_2gen(4, 7, 4).k == 2
    assert formulas.predict_components_2gen(4, 7, 5).k == 1
    beyond = formulas.predict_components_2gen(4, 7, 6)
    assert not beyond.applicable
    assert beyond.predicted_fields() == {}


def test_ngen_parity():
    assert formulas.predict_components_ngen(GeneratorBounds.of(2, 2, 2), 2).claim_id == "parity.even"
    assert not formulas.predict_components_ngen(GeneratorBounds.of(2, 2, 2), 3).applicable
    with pytest.raises(InvalidParameterError):
        formulas.predict_components_ngen(GeneratorBounds.of(5), 1)


@pytest.mark.parametrize("m, t, k", [(7, 3, 3), (7, 6, 6), (7, 7, 7), (7, 9, 7)])
def test_cyclic_components(m, t, k):
    assert formulas.predict_components_cyclic(m, t).k == k


def test_cyclic_subgroup():
    prediction = formulas.predict_cyclic_subgroup(12, 4)
    assert prediction.predicted_fields() == {"subgroup_size": 3}
    assert not formulas.predict_cyclic_subgroup(12, 5).applicable


def test_grid():
    prediction = formulas.predict_grid(GeneratorBounds.of(2, 3, 4, 5))
    assert (prediction.k, prediction.edges, prediction.bipartite) == (1, 326, True)
    assert formulas.predict_grid(GeneratorBounds.of(2, 4)).edges == 10


def test_bipartite_and_isolated_free():
    assert formulas.predict_bipartite(3, 5, 3).bipartite is True
    assert not formulas.predict_bipartite(3, 5, 2).applicable
    assert not formulas.predict_bipartite(3, 5, 5).applicable
    assert formulas.predict_isolated_free(2, 4, 2).isolated_free is True
    assert formulas.predict_isolated_free(2, 4, 3).isolated_free is False


@pytest.mark.parametrize("n, t, edges", [(4, 1, 10), (4, 2, 10), (4, 4, 2), (7, 3, 18)])
def test_dihedral_edges(n, t, edges):
    assert formulas.predict_edges_dihedral(n, t).edges == edges


def test_dihedral_components():
    case1 = formulas.predict_components_dihedral(8, 4)
    assert (case1.claim_id, case1.k, case1.isomorphic) == ("T5.case1", 2, True)
    assert formulas.predict_components_dihedral(8, 3).claim_id == "T5.case2"

    even = formulas.predict_components_dihedral(4, 4)
    assert even.claim_id == "T5.case3"
    assert even.k == 6
    assert even.isolated == 4
    assert even.structure == (("path", 2), ("path", 2))

    odd = formulas.predict_components_dihedral(7, 6)
    assert odd.k == 8
    assert odd.structure == (("path", 4), ("path", 4))
    assert odd.isolated == 6

    assert not formulas.predict_components_dihedral(4, 5).applicable


def test_isolated_count():
    assert formulas.predict_isolated_count_dihedral(7, 6).isolated == 6
    assert not formulas.predict_isolated_count_dihedral(7, 4).applicable


def test_cycle_structure():
    odd = formulas.predict_cycle_structure(5, 3)
    assert (odd.claim_id, odd.k, odd.structure, odd.chi) == ("T7.odd", 1, (("cycle", 10),), 2)
    even = formulas.predict_cycle_structure(7, 4)
    assert (even.claim_id, even.k, even.chi) == ("T7.even", 2, 3)
    assert not formulas.predict_cycle_structure(3, 2).applicable
    assert not formulas.predict_cycle_structure(6, 3).applicable


def test_structure_corollaries():
    assert [p.claim_id for p in formulas.predict_structure_corollaries(8, 5)] == [
        "C-paths",
        "C-2chromatic",
    ]
    assert [p.claim_id for p in formulas.predict_structure_corollaries(6, 6)] == [
        "C-ngraph",
        "C-2chromatic",
    ]
    assert formulas.predict_structure_corollaries(8, 2) == []


def test_ngraph():
    prediction = formulas.predict_ngraph(5, 5)
    assert (prediction.k, prediction.isolated) == (8, 6)


def test_bounds_equality():
    same = formulas.predict_bounds_equality(
        [NamedGroup.dihedral(4), NamedGroup.quaternion8(), NamedGroup.direct_product((2, 4))], 2
    )
    assert same.applicable
    assert same.reason == "dihedral:4/q8/product:2,4"
    different = formulas.predict_bounds_equality([NamedGroup.dihedral(4), NamedGroup.cyclic(8)], 2)
    assert not different.applicable
    with pytest.raises(InvalidParameterError):
        formulas.predict_bounds_equality([NamedGroup.quaternion8()], 1)


@pytest.mark.parametrize(
    "call",
    [
        lambda: formulas.threshold_general(1, 4),
        lambda: formulas.predict_components_2gen(2, 4, 0),
        lambda: formulas.predict_edges_dihedral(1, 1),
        lambda: formulas.predict_components_cyclic(1, 1),
        lambda: formulas.predict_oracle(GeneratorBounds.of(2, 2), 0),
    ],
)
def test_domain_errors(call):
    with pytest.raises(InvalidParameterError):
        call()
