from __future__ import annotations

import itertools
import logging
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Literal, Mapping, Sequence

import networkx as nx

from hyperwiener.core.errors import (
    DisconnectedHypergraph,
    DuplicateEdge,
    InvalidHypergraph,
    InvalidParameters,
    MissingEdge,
    NoGoodEdge,
    NotEdgeMinimal,
    ParseError,
    SearchSpaceTooLarge,
    VertexOutOfRange,
)
from hyperwiener.core.utils.union_find import UnionFind
from hyperwiener.settings import settings

log = logging.getLogger("hyperwiener.core.hypergraph")

__all__ = (
    "Edge",
    "Unreachable",
    "UNREACHABLE",
    "Hypergraph",
    "DistanceProfile",
    "parse",
    "serialize",
    "two_section",
    "components",
    "is_connected",
    "distance",
    "berge_path_oracle",
    "wiener",
    "distance_profile",
    "is_edge_minimal",
    "good_edges",
    "find_good_edge",
    "add_edge",
    "remove_edge",
)

Edge = tuple[int, ...]

_HEADER = re.compile(r"([0-9]+) ([0-9]+)")
_EDGE_LINE = re.compile(r"[0-9]+(?: [0-9]+)*")


class Unreachable(Enum):
    """
    Marker returned instead of a distance when no Berge path joins two vertices.
    """

    TOKEN = "unreachable"

    def __str__(self) -> str:
        return self.value


UNREACHABLE = Unreachable.TOKEN
Distance = int | Literal[Unreachable.TOKEN]


def _normalize_edge(members: Iterable[int], n: int, k: int) -> Edge:
    edge = tuple(sorted(members))
    if len(edge) != k:
        raise InvalidHypergraph(f"Edge {edge} has {len(edge)} vertices, expected {k}.")
    if len(set(edge)) != k:
        raise InvalidHypergraph(f"Edge {edge} contains a duplicate vertex.")
    if edge[0] < 1 or edge[-1] > n:
        raise InvalidHypergraph(f"Edge {edge} has a vertex label outside [1, {n}].")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    """
    A k-uniform hypergraph on the vertex set [1, n].

    Values are immutable; the edge tuple is normalized to strictly sorted k-tuples in
    lexicographic order, which fixes the iteration order used for tie-breaking.

    Attributes
    ----------
    n: int
        Number of vertices, labeled 1..n
    k: int
        Uniformity, 1 <= k <= n
    edges: tuple[Edge, ...]
        The edge set, each edge a strictly increasing k-tuple of labels
    """

    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidHypergraph(f"Vertex count must be positive, got {self.n}.")
        if not 1 <= self.k <= self.n:
            raise InvalidHypergraph(f"Uniformity must be in [1, {self.n}], got {self.k}.")
        edges = [_normalize_edge(edge, self.n, self.k) for edge in self.edges]
        edges.sort()
        for previous, current in zip(edges, edges[1:]):
            if previous == current:
                raise DuplicateEdge(f"Edge {current} appears more than once.")
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """
        Vertex to incident edge indices. Index 0 is unused so that labels index directly.
        """
        incident: list[list[int]] = [[] for _ in range(self.n + 1)]
        for index, edge in enumerate(self.edges):
            for vertex in edge:
                incident[vertex].append(index)
        return tuple(tuple(x) for x in incident)

    @cached_property
    def partition(self) -> tuple[frozenset[int], ...]:
        return _partition(self)

    @cached_property
    def _rows(self) -> dict[int, list[int | None]]:
        # BFS rows memoized per source; writes are idempotent
        return {}

    def has_edge(self, members: Iterable[int]) -> bool:
        return tuple(sorted(members)) in self.edge_set

    def check_vertex(self, vertex: int):
        if not 1 <= vertex <= self.n:
            raise VertexOutOfRange(f"Vertex {vertex} is outside [1, {self.n}].")

    def restrict(self, vertices: Iterable[int]) -> Hypergraph:
        """
        Induced sub-hypergraph on ``vertices``, relabeled 1..m in increasing label order.
        Only edges fully contained in the subset are kept.

        Raises
        ------
        VertexOutOfRange
            A vertex is outside [1, n].
        InvalidParameters
            The subset has fewer than k vertices.
        """
        kept = sorted(set(vertices))
        for vertex in kept:
            self.check_vertex(vertex)
        if len(kept) < self.k:
            raise InvalidParameters(
                f"Cannot restrict to {len(kept)} vertices, at least k={self.k} are needed."
            )
        mapping = {old: new for new, old in enumerate(kept, start=1)}
        inside = [
            tuple(mapping[v] for v in edge)
            for edge in self.edges
            if all(v in mapping for v in edge)
        ]
        return Hypergraph(len(kept), self.k, tuple(inside))

    def relabel(self, mapping: Mapping[int, int] | Sequence[int]) -> Hypergraph:
        """
        Apply a bijection of [1, n]. A sequence is read as ``mapping[v - 1]`` being the image
        of ``v``.
        """
        if isinstance(mapping, Mapping):
            image = {v: mapping[v] for v in self.vertices}
        else:
            if len(mapping) != self.n:
                raise InvalidHypergraph(f"A relabeling of [1, {self.n}] needs {self.n} images.")
            image = {v: mapping[v - 1] for v in self.vertices}
        if sorted(image.values()) != list(self.vertices):
            raise InvalidHypergraph("Relabeling is not a bijection of the vertex set.")
        return Hypergraph(
            self.n, self.k, tuple(tuple(image[v] for v in edge) for edge in self.edges)
        )


@dataclass(frozen=True)
class DistanceProfile:
    """
    Breadth-first layers around a source vertex.

    Attributes
    ----------
    source: int
        The vertex the layers are measured from
    layer_sizes: tuple[int, ...]
        ``layer_sizes[i - 1]`` is the number of vertices at distance i, for i = 1..eccentricity
    unreachable_count: int
        Number of vertices with no Berge path to the source
    """

    source: int
    layer_sizes: tuple[int, ...]
    unreachable_count: int = 0

    def __post_init__(self):
        if any(size < 1 for size in self.layer_sizes):
            raise InvalidHypergraph("BFS layers up to the eccentricity cannot be empty.")
        if self.unreachable_count < 0:
            raise InvalidHypergraph("Unreachable count cannot be negative.")

    @property
    def eccentricity(self) -> int:
        return len(self.layer_sizes)

    @property
    def reachable_count(self) -> int:
        return sum(self.layer_sizes)

    @property
    def distance_sum(self) -> int:
        return sum(i * size for i, size in enumerate(self.layer_sizes, start=1))


def parse(text: str) -> Hypergraph:
    """
    Read hypergraph file content.

    The first non-comment, non-empty line is ``<n> <k>``; every further non-empty line holds
    one edge as k strictly increasing labels separated by single spaces. Lines starting with
    ``#`` are ignored.

    Raises
    ------
    ParseError
        The content does not follow the format, including duplicate edges.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        if header is None:
            match = _HEADER.fullmatch(line)
            if not match:
                raise ParseError(f"malformed header {line!r}, expected '<n> <k>'", lineno)
            n, k = int(match.group(1)), int(match.group(2))
            if n < 1 or not 1 <= k <= n:
                raise ParseError(f"header needs 1 <= k <= n, got n={n} k={k}", lineno)
            header = (n, k)
            continue

        n, k = header
        if not _EDGE_LINE.fullmatch(line):
            raise ParseError(f"malformed edge line {line!r}", lineno)
        labels = [int(x) for x in line.split(" ")]
        if len(labels) != k:
            raise ParseError(f"edge has {len(labels)} labels, expected {k}", lineno)
        if len(set(labels)) != k:
            raise ParseError("duplicate vertex within edge", lineno)
        for label in labels:
            if not 1 <= label <= n:
                raise ParseError(f"vertex label {label} out of range [1, {n}]", lineno)
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise ParseError("edge labels must be strictly increasing", lineno)
        edge = tuple(labels)
        if edge in seen:
            raise ParseError(f"duplicate edge {line!r}", lineno)
        seen.add(edge)
        edges.append(edge)

    if header is None:
        raise ParseError("missing '<n> <k>' header")
    return Hypergraph(header[0], header[1], tuple(edges))


def serialize(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.k}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in h.edges)
    return "\n".join(lines) + "\n"


def two_section(h: Hypergraph) -> nx.Graph:
    """
    The simple graph on [1, n] where two vertices are adjacent iff some edge holds both.
    """
    graph = nx.Graph()
    graph.add_nodes_from(h.vertices)
    for edge in h.edges:
        graph.add_edges_from(itertools.combinations(edge, 2))
    return graph


def _partition(h: Hypergraph, skip: int | None = None) -> tuple[frozenset[int], ...]:
    forest = UnionFind(h.n + 1)
    for index, edge in enumerate(h.edges):
        if index != skip:
            forest.union_all(edge)
    groups: dict[int, list[int]] = {}
    for vertex in h.vertices:
        groups.setdefault(forest.find(vertex), []).append(vertex)
    # vertices are visited in increasing order, so groups come out sorted by smallest member
    return tuple(frozenset(group) for group in groups.values())


def components(h: Hypergraph) -> list[frozenset[int]]:
    return list(h.partition)


def is_connected(h: Hypergraph) -> bool:
    return len(h.partition) == 1


def _require_connected(h: Hypergraph):
    if not is_connected(h):
        raise DisconnectedHypergraph(
            f"The hypergraph has {len(h.partition)} connected components."
        )


def _bfs(h: Hypergraph, source: int) -> list[int | None]:
    row = h._rows.get(source)
    if row is not None:
        return row
    row = [None] * (h.n + 1)
    row[source] = 0
    used = [False] * len(h.edges)
    frontier = [source]
    depth = 0
    while frontier:
        depth += 1
        following: list[int] = []
        for vertex in frontier:
            for index in h.incidence[vertex]:
                if used[index]:
                    continue
                used[index] = True
                for other in h.edges[index]:
                    if row[other] is None:
                        row[other] = depth
                        following.append(other)
        frontier = following
    h._rows[source] = row
    return row


def distance(h: Hypergraph, u: int, v: int) -> Distance:
    """
    Berge distance between ``u`` and ``v``, or ``UNREACHABLE``.
    """
    h.check_vertex(u)
    h.check_vertex(v)
    if u == v:
        return 0
    value = _bfs(h, u)[v]
    return UNREACHABLE if value is None else value


def berge_path_oracle(h: Hypergraph, u: int, v: int) -> Distance:
    """
    Length of the shortest Berge path, found by exhaustive search over alternating sequences
    of distinct vertices and distinct edges. Slow by construction; only accepted on small
    instances.
    """
    h.check_vertex(u)
    h.check_vertex(v)
    if h.n > settings.oracle_max_order or len(h.edges) > settings.oracle_max_edges:
        raise SearchSpaceTooLarge(
            f"The Berge path oracle accepts at most {settings.oracle_max_order} vertices "
            f"and {settings.oracle_max_edges} edges.",
            size=len(h.edges),
            limit=settings.oracle_max_edges,
        )
    if u == v:
        return 0
    for length in range(1, len(h.edges) + 1):
        if _berge_walk(h, u, v, length, {u}, set()):
            return length
    return UNREACHABLE


def _berge_walk(
    h: Hypergraph,
    current: int,
    target: int,
    remaining: int,
    used_vertices: set[int],
    used_edges: set[int],
) -> bool:
    for index, edge in enumerate(h.edges):
        if index in used_edges or current not in edge:
            continue
        if remaining == 1:
            if target in edge:
                return True
            continue
        used_edges.add(index)
        for vertex in edge:
            if vertex == target or vertex in used_vertices:
                continue
            used_vertices.add(vertex)
            found = _berge_walk(h, vertex, target, remaining - 1, used_vertices, used_edges)
            used_vertices.discard(vertex)
            if found:
                used_edges.discard(index)
                return True
        used_edges.discard(index)
    return False


def wiener(h: Hypergraph) -> int:
    """
    Sum of Berge distances over all unordered vertex pairs, from one BFS per vertex.

    Raises
    ------
    DisconnectedHypergraph
        Some pair of vertices is not joined by a Berge path.
    """
    _require_connected(h)
    total = 0
    for source in h.vertices:
        row = _bfs(h, source)
        total += sum(row[source + 1 :])  # type: ignore
    return total


def distance_profile(h: Hypergraph, v: int) -> DistanceProfile:
    h.check_vertex(v)
    row = _bfs(h, v)
    counts = Counter(row[1:])
    unreachable = counts.pop(None, 0)
    eccentricity = max((d for d in counts if d), default=0)
    return DistanceProfile(
        source=v,
        layer_sizes=tuple(counts[i] for i in range(1, eccentricity + 1)),
        unreachable_count=unreachable,
    )


def is_edge_minimal(h: Hypergraph) -> bool:
    """
    True iff deleting any single edge disconnects the hypergraph.
    """
    _require_connected(h)
    return all(len(_partition(h, skip=i)) > 1 for i in range(len(h.edges)))


def good_edges(h: Hypergraph) -> list[Edge]:
    """
    Every edge whose removal leaves at most one component with more than one vertex, in
    lexicographic order.
    """
    _require_connected(h)
    found: list[Edge] = []
    for index, edge in enumerate(h.edges):
        parts = _partition(h, skip=index)
        if sum(1 for part in parts if len(part) > 1) <= 1:
            found.append(edge)
    return found


def find_good_edge(h: Hypergraph) -> Edge:
    """
    The lexicographically smallest good edge of a connected edge-minimal hypergraph.

    Raises
    ------
    NotEdgeMinimal
        Some edge can be removed without disconnecting the hypergraph.
    NoGoodEdge
        No edge qualifies, which edge-minimality rules out.
    """
    if not is_edge_minimal(h):
        raise NotEdgeMinimal("A good edge is only guaranteed on edge-minimal hypergraphs.")
    found = good_edges(h)
    if not found:
        log.error(f"No good edge found on edge-minimal hypergraph {h!r}")
        raise NoGoodEdge("No edge leaves at most one component of size greater than one.")
    return found[0]


def add_edge(h: Hypergraph, members: Iterable[int]) -> Hypergraph:
    edge = _normalize_edge(members, h.n, h.k)
    if edge in h.edge_set:
        raise DuplicateEdge(f"Edge {edge} is already present.")
    return Hypergraph(h.n, h.k, h.edges + (edge,))


def remove_edge(h: Hypergraph, members: Iterable[int]) -> Hypergraph:
    edge = tuple(sorted(members))
    if edge not in h.edge_set:
        raise MissingEdge(f"Edge {edge} is not present.")
    return Hypergraph(h.n, h.k, tuple(e for e in h.edges if e != edge))
