import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.utils.exact_rank import RANK_PRIMES, bareiss_rank, exact_rank, modular_rank

int_matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda rows: st.integers(min_value=1, max_value=6).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-3, max_value=3), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)

sparse_matrices = st.integers(min_value=2, max_value=9).flatmap(
    lambda size: st.lists(
        st.lists(st.sampled_from([0, 0, 0, 0, 1, -1, 2]), min_size=size, max_size=size),
        min_size=size,
        max_size=size,
    )
)


@pytest.mark.parametrize(
    "matrix, rank",
    [
        ([[0, 0], [0, 0]], 0),
        ([[1, 2], [2, 4]], 1),
        ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 3),
        ([[1, -1, 0], [-1, 2, -1], [0, -1, 1]], 2),
        ([[0, 1, 2], [0, 2, 4], [1, 0, 0]], 2),
    ],
)
def test_bareiss_known_ranks(matrix, rank):
    assert bareiss_rank(matrix) == rank


@given(int_matrices)
def test_bareiss_agrees_with_numpy(matrix):
    assert bareiss_rank(matrix) == np.linalg.matrix_rank(np.array(matrix, dtype=float))


@given(int_matrices)
def test_modular_rank_never_exceeds_rank(matrix):
    exact = bareiss_rank(matrix)
    for prime in RANK_PRIMES:
        assert modular_rank(matrix, prime) <= exact


def test_modular_rank_can_undercount():
    assert bareiss_rank([[3, 0], [0, 1]]) == 2
    assert modular_rank([[3, 0], [0, 1]], 3) == 1


def test_bareiss_handles_large_entries():
    big = 10**30
    assert bareiss_rank([[big, 1], [1, big]]) == 2
    assert bareiss_rank([[big, 2 * big], [1, 2]]) == 1


def test_exact_rank_switches_method():
    laplacian = [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    exact = exact_rank(laplacian, max_exact_order=3)
    assert (exact.rank, exact.method, exact.modular_ranks) == (2, "bareiss", ())
    modular = exact_rank(laplacian, max_exact_order=2)
    assert modular.rank == 2
    assert modular.method == "modular"
    assert modular.modular_ranks == (2, 2)


@given(sparse_matrices)
def test_bareiss_agrees_with_numpy_on_sparse_matrices(matrix):
    assert bareiss_rank(matrix) == np.linalg.matrix_rank(np.array(matrix, dtype=float))


def test_bareiss_catches_up_rows_skipped_for_several_steps():
    matrix = [
        [2, 1, 0, 0],
        [0, 3, 1, 0],
        [0, 0, 5, 1],
        [0, 0, 1, 1],
    ]
    assert bareiss_rank(matrix) == 4
    assert bareiss_rank(matrix[:3] + [[0, 0, 5, 1]]) == 3
    assert bareiss_rank([[0, 0, 1, 1]] + matrix[:3]) == 4


def _path_laplacian(order):
    matrix = [[0] * order for _ in range(order)]
    for i in range(order - 1):
        matrix[i][i] += 1
        matrix[i + 1][i + 1] += 1
        matrix[i][i + 1] = matrix[i + 1][i] = -1
    return matrix


def test_bareiss_on_large_sparse_laplacian():
    path = _path_laplacian(150)
    assert bareiss_rank(path) == 149
    # two disjoint paths interleaved so every pivot column has a skipped row
    order = 120
    interleaved = [[0] * order for _ in range(order)]
    for start in (0, 1):
        for i in range(start, order - 2, 2):
            j = i + 2
            interleaved[i][i] += 1
            interleaved[j][j] += 1
            interleaved[i][j] = interleaved[j][i] = -1
    assert bareiss_rank(interleaved) == order - 2
