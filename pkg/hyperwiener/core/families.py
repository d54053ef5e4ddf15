"""
Generators for the named hypergraph families: tight paths, loose paths and stars, complete
hypergraphs, dense stars and the Fano plane.

Edges are produced in construction order and normalized by ``Hypergraph``, so generated files
are byte-stable.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable

from hyperwiener.core.errors import (
    BadLinearOrder,
    BadOffset,
    DivisibleOrder,
    InvalidParameters,
    NonDivisibleOrder,
    UniformityTooSmall,
)
from hyperwiener.core.hypergraph import Edge, Hypergraph

log = logging.getLogger("hyperwiener.core.families")

__all__ = (
    "PathParams",
    "tight_path",
    "offset_tight_path",
    "extremal_path",
    "loose_path",
    "loose_star",
    "complete",
    "dense_star",
    "fano",
    "FAMILIES",
)

FANO_LINES: tuple[Edge, ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 5, 6),
)


@dataclass(frozen=True)
class PathParams:
    """
    Decomposition n = k * s + r with 0 <= r < k.

    Attributes
    ----------
    n: int
        Order
    k: int
        Uniformity
    s: int
        Quotient
    r: int
        Remainder
    x: int | None
        Offset of the shifted edges, only meaningful when r == 0
    """

    n: int
    k: int
    s: int
    r: int
    x: int | None = None

    @classmethod
    def of(cls, n: int, k: int, x: int | None = None) -> PathParams:
        if k < 1 or n < k:
            raise InvalidParameters(f"Need 1 <= k <= n, got n={n} k={k}.")
        s, r = divmod(n, k)
        return cls(n=n, k=k, s=s, r=r, x=x)


def _interval(start: int, end: int) -> Edge:
    return tuple(range(start, end + 1))


def tight_path(n: int, k: int) -> Hypergraph:
    """
    The tight path on [n] when k does not divide n: the s consecutive blocks of k vertices,
    plus the same blocks shifted right by r.

    Raises
    ------
    DivisibleOrder
        k divides n; use ``offset_tight_path`` instead.
    """
    params = PathParams.of(n, k)
    if params.r == 0:
        raise DivisibleOrder(f"{k} divides {n}, the tight path needs an offset.")
    s, r = params.s, params.r
    blocks = [_interval((i - 1) * k + 1, i * k) for i in range(1, s + 1)]
    shifted = [_interval(r + (i - 1) * k + 1, i * k + r) for i in range(1, s + 1)]
    return Hypergraph(n, k, tuple(blocks + shifted))


def offset_tight_path(n: int, k: int, x: int) -> Hypergraph:
    """
    The tight path on [n] when k divides n: the s blocks of k vertices plus the s - 1 blocks
    shifted right by x, for 0 < x < k.
    """
    params = PathParams.of(n, k, x)
    if params.r != 0:
        raise NonDivisibleOrder(f"{k} does not divide {n}, use the tight path.")
    if not 0 < x < k:
        raise BadOffset(f"Offset must satisfy 0 < x < {k}, got {x}.")
    s = params.s
    blocks = [_interval((i - 1) * k + 1, i * k) for i in range(1, s + 1)]
    shifted = [_interval((i - 1) * k + 1 + x, i * k + x) for i in range(1, s)]
    return Hypergraph(n, k, tuple(blocks + shifted))


def extremal_path(n: int, k: int, x: int = 1) -> Hypergraph:
    """
    The maximizer of the Wiener index among connected k-uniform hypergraphs of order n.
    """
    if n % k:
        return tight_path(n, k)
    return offset_tight_path(n, k, x)


def _linear_edge_count(n: int, k: int) -> int:
    if k < 2 or n < k or (n - 1) % (k - 1):
        raise BadLinearOrder(f"A linear hyper-tree needs n = m(k-1) + 1, got n={n} k={k}.")
    return (n - 1) // (k - 1)


def loose_path(n: int, k: int) -> Hypergraph:
    """
    Consecutive edges share exactly one vertex: [1, k], [k, 2k-1], ...
    """
    m = _linear_edge_count(n, k)
    step = k - 1
    return Hypergraph(n, k, tuple(_interval(i * step + 1, (i + 1) * step + 1) for i in range(m)))


def loose_star(n: int, k: int) -> Hypergraph:
    """
    All edges pairwise share only the center vertex 1; leaves come in consecutive blocks.
    """
    m = _linear_edge_count(n, k)
    step = k - 1
    return Hypergraph(
        n, k, tuple((1,) + _interval(i * step + 2, (i + 1) * step + 1) for i in range(m))
    )


def complete(n: int, k: int) -> Hypergraph:
    if k < 1 or n < k:
        raise InvalidParameters(f"Need 1 <= k <= n, got n={n} k={k}.")
    return Hypergraph(n, k, tuple(itertools.combinations(range(1, n + 1), k)))


def dense_star(n: int, k: int) -> Hypergraph:
    """
    Center 1 joined to every (k-1)-subset of the other vertices. Every pair of vertices lies in
    a common edge, so the Wiener index is C(n, 2).

    Raises
    ------
    UniformityTooSmall
        k < 3, where the construction is the graph star and misses that value.
    """
    if k < 3:
        raise UniformityTooSmall(f"The dense star needs k >= 3, got k={k}.")
    if n <= k:
        raise InvalidParameters(f"The dense star needs n > k, got n={n} k={k}.")
    return Hypergraph(
        n, k, tuple((1,) + rest for rest in itertools.combinations(range(2, n + 1), k - 1))
    )


def fano() -> Hypergraph:
    return Hypergraph(7, 3, FANO_LINES)


FAMILIES: dict[str, Callable[..., Hypergraph]] = {
    "tight-path": lambda n, k, x: tight_path(n, k),
    "offset-tight-path": lambda n, k, x: offset_tight_path(n, k, x),
    "extremal": lambda n, k, x: extremal_path(n, k, x),
    "loose-path": lambda n, k, x: loose_path(n, k),
    "loose-star": lambda n, k, x: loose_star(n, k),
    "complete": lambda n, k, x: complete(n, k),
    "dense-star": lambda n, k, x: dense_star(n, k),
    "fano": lambda n, k, x: fano(),
}
