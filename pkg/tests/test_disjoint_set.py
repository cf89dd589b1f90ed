from hypothesis import given
from hypothesis import strategies as st

from src.utils.disjoint_set import DisjointSet, components_from_edges


def test_union_and_count():
    dsu = DisjointSet(6)
    assert dsu.count == 6
    assert dsu.union(0, 1)
    assert dsu.union(1, 2)
    assert not dsu.union(0, 2)
    assert dsu.union(4, 5)
    assert dsu.count == 3
    assert dsu.linked(2, 0)
    assert not dsu.linked(3, 4)
    assert dsu.blocks() == [[0, 1, 2], [3], [4, 5]]


def test_components_from_edges():
    assert components_from_edges(5, [(3, 4), (0, 4)]) == [[0, 3, 4], [1], [2]]
    assert components_from_edges(0, []) == []


@given(
    st.integers(min_value=1, max_value=30).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40
            ),
        )
    )
)
def test_blocks_partition_the_vertices(case):
    size, edges = case
    blocks = components_from_edges(size, edges)
    assert sorted(v for block in blocks for v in block) == list(range(size))
    owner = {v: i for i, block in enumerate(blocks) for v in block}
    assert all(owner[u] == owner[v] for u, v in edges)
    assert [block[0] for block in blocks] == sorted(block[0] for block in blocks)
