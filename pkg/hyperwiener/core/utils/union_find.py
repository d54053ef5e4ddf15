"""Disjoint-set forest over the integers 0..size-1."""


class UnionFind:
    """
    Union-find with union by rank and path halving.

    Elements are 0-based. Callers working on 1-based vertex labels size it ``n + 1`` and leave
    slot 0 alone; bitmask callers use bit positions directly.
    """

    __slots__ = ("parents", "ranks", "count")

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.ranks = [0] * size
        self.count = size

    def find(self, a: int) -> int:
        parents = self.parents
        while parents[a] != a:
            parents[a] = parents[parents[a]]
            a = parents[a]
        return a

    def union(self, a: int, b: int) -> bool:
        """
        Merge the sets of ``a`` and ``b``. Returns False if they were already merged.
        """
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.ranks[root_a] < self.ranks[root_b]:
            root_a, root_b = root_b, root_a
        self.parents[root_b] = root_a
        if self.ranks[root_a] == self.ranks[root_b]:
            self.ranks[root_a] += 1
        self.count -= 1
        return True

    def union_all(self, members) -> None:
        it = iter(members)
        first = next(it, None)
        if first is None:
            return
        for other in it:
            self.union(first, other)
