"""Tests for the disjoint-set forest."""

from hyperwiener.core.utils.union_find import UnionFind


class TestUnionFind:
    """Tests for UnionFind."""

    def test_zero_based(self):
        forest = UnionFind(4)
        assert forest.union(0, 3)
        assert forest.find(0) == forest.find(3)
        assert forest.count == 3

    def test_repeated_union(self):
        forest = UnionFind(3)
        assert forest.union(1, 2)
        assert not forest.union(2, 1)
        assert forest.count == 2

    def test_union_all(self):
        forest = UnionFind(6)
        forest.union_all([1, 3, 5])
        forest.union_all([])
        assert len({forest.find(v) for v in (1, 3, 5)}) == 1
        assert forest.find(2) != forest.find(1)
        assert forest.count == 4

    def test_one_based_labels(self):
        forest = UnionFind(5 + 1)
        for edge in [(1, 2, 3), (3, 4, 5)]:
            forest.union_all(edge)
        assert len({forest.find(v) for v in range(1, 6)}) == 1
        # slot 0 stays a singleton of its own
        assert forest.count == 2
