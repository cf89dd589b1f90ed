from typing import Dict, Iterable, List, Tuple


class DisjointSet:
    """
    Union-find over 0..n-1 with path halving and union by rank.
    """

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.count = size

    def find(self, x: int) -> int:
        """Root of the set containing x."""
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if they were already joined."""
        i = self.find(x)
        j = self.find(y)

        if i == j:
            return False

        if self.rank[i] < self.rank[j]:
            i, j = j, i
        self.parent[j] = i
        if self.rank[i] == self.rank[j]:
            self.rank[i] += 1

        self.count -= 1
        return True

    def linked(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def blocks(self) -> List[List[int]]:
        """All sets, each sorted, ordered by smallest member."""
        groups: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda block: block[0])


def components_from_edges(size: int, edges: Iterable[Tuple[int, int]]) -> List[List[int]]:
    dsu = DisjointSet(size)
    for u, v in edges:
        dsu.union(u, v)
    return dsu.blocks()
