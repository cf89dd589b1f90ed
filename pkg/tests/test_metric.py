import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.metric import d1, distance_block, distance_matrix, max_distance
from src.core.presentation import element_at, exponent_array
from src.models.errors import IncompatibleElementsError
from src.models.group_models import GeneratorBounds, GroupElement


@st.composite
def element_triples(draw):
    bounds = GeneratorBounds(
        tuple(draw(st.lists(st.integers(min_value=2, max_value=7), min_size=1, max_size=4)))
    )
    index = st.integers(min_value=0, max_value=bounds.order - 1)
    return tuple(element_at(bounds, draw(index)) for _ in range(3))


@given(element_triples())
def test_d1_is_a_metric(triple):
    x, y, z = triple
    assert d1(x, y) == d1(y, x)
    assert (d1(x, y) == 0) == (x == y)
    assert d1(x, z) <= d1(x, y) + d1(y, z)


def test_d1_examples():
    bounds = GeneratorBounds.of(2, 4)
    assert d1(GroupElement(bounds, (0, 0)), GroupElement(bounds, (1, 3))) == 4
    assert d1(GroupElement(bounds, (1, 2)), GroupElement(bounds, (0, 3))) == 2


def test_d1_rejects_mixed_bounds():
    x = GroupElement(GeneratorBounds.of(2, 4), (0, 1))
    y = GroupElement(GeneratorBounds.of(4, 2), (0, 1))
    with pytest.raises(IncompatibleElementsError):
        d1(x, y)


def test_max_distance():
    assert max_distance(GeneratorBounds.of(2, 7)) == 7
    assert max_distance(GeneratorBounds.of(2, 3, 4, 5)) == 10
    assert max_distance(GeneratorBounds.of(9)) == 8


def test_distance_matrix_agrees_with_d1(settings):
    bounds = GeneratorBounds.of(3, 2, 3)
    matrix = distance_matrix(bounds, settings)
    assert matrix.shape == (18, 18)
    for u in range(bounds.order):
        for v in range(bounds.order):
            assert matrix[u, v] == d1(element_at(bounds, u), element_at(bounds, v))
    assert np.array_equal(matrix, matrix.T)
    assert matrix.max() == max_distance(bounds)


def test_distance_block_is_a_slice(settings):
    bounds = GeneratorBounds.of(4, 5)
    coords = exponent_array(bounds, settings)
    full = distance_block(coords, coords)
    assert np.array_equal(distance_block(coords[3:9], coords), full[3:9])


@pytest.mark.parametrize("bounds", [(2, 4), (3, 4), (4, 4, 4)])
def test_metric_axioms_exhaustive(settings, bounds):
    matrix = distance_matrix(GeneratorBounds(bounds), settings)
    order = matrix.shape[0]
    assert np.array_equal(matrix, matrix.T)
    assert all(matrix[u, v] != 0 for u in range(order) for v in range(order) if u != v)
    # d(x, z) <= d(x, y) + d(y, z) for every triple
    assert (matrix[:, None, :] <= matrix[:, :, None] + matrix[None, :, :]).all()
