from __future__ import annotations

import logging
from dataclasses import dataclass

from cachetools import LRUCache, cached

from hyperwiener.core.errors import OrderTooLarge
from hyperwiener.core.hypergraph import Edge, Hypergraph
from hyperwiener.settings import settings

log = logging.getLogger("hyperwiener.core.canonical")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    The lexicographically smallest sorted edge list over all relabelings of [1, n]. Two
    hypergraphs are isomorphic iff their canonical forms are equal.
    """

    n: int
    k: int
    edges: tuple[Edge, ...]

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.k, self.edges)


def _twins(h: Hypergraph) -> list[set[int]]:
    """
    ``twins[u]`` holds every w such that swapping u and w is an automorphism.
    """
    twins: list[set[int]] = [set() for _ in range(h.n + 1)]
    for u in h.vertices:
        for w in range(u + 1, h.n + 1):
            swap = {u: w, w: u}
            if all(
                tuple(sorted(swap.get(v, v) for v in edge)) in h.edge_set for edge in h.edges
            ):
                twins[u].add(w)
                twins[w].add(u)
    return twins


@cached(LRUCache(maxsize=1024))
def canonical_form(h: Hypergraph) -> CanonicalForm:
    """
    Compute the canonical form by branch and bound over relabelings.

    New labels are handed out in increasing order. Once labels 1..j are placed, every edge
    is at least its placed labels followed by j+1, j+2, ..., so the sorted list of those
    completions bounds every relabeling of the subtree from below. Subtrees whose bound
    exceeds the best list found are cut, and of two unplaced vertices whose swap is an
    automorphism only one is branched on.

    Raises
    ------
    OrderTooLarge
        n exceeds ``settings.canonical_max_order``.
    """
    if h.n > settings.canonical_max_order:
        raise OrderTooLarge(
            f"Canonical forms are limited to n <= {settings.canonical_max_order}, got {h.n}."
        )
    if not h.edges:
        return CanonicalForm(h.n, h.k, ())

    n, k = h.n, h.k
    twins = _twins(h)
    order = sorted(h.vertices, key=lambda v: (-len(h.incidence[v]), v))
    label = [0] * (n + 1)
    best: list[Edge] | None = None

    def lower_bound(placed: int) -> list[Edge]:
        partial = []
        for edge in h.edges:
            known = sorted(label[v] for v in edge if label[v])
            known.extend(range(placed + 1, placed + 1 + k - len(known)))
            partial.append(tuple(known))
        partial.sort()
        return partial

    def search(placed: int):
        nonlocal best
        bound = lower_bound(placed)
        if best is not None and bound > best:
            return
        if placed == n:
            best = bound
            return
        tried: list[int] = []
        for vertex in order:
            if label[vertex] or any(other in twins[vertex] for other in tried):
                continue
            tried.append(vertex)
            label[vertex] = placed + 1
            search(placed + 1)
            label[vertex] = 0

    search(0)
    assert best is not None
    return CanonicalForm(n, k, tuple(best))
