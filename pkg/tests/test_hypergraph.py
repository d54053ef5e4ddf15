"""Tests for the hypergraph value type, file format, distances and edge-minimality."""

import itertools
import random

import networkx as nx
import pytest

from hyperwiener.core.errors import (
    DisconnectedHypergraph,
    DuplicateEdge,
    InvalidHypergraph,
    InvalidParameters,
    MissingEdge,
    NotEdgeMinimal,
    ParseError,
    SearchSpaceTooLarge,
    VertexOutOfRange,
)
from hyperwiener.core.families import complete, fano, tight_path
from hyperwiener.core.hypergraph import (
    UNREACHABLE,
    DistanceProfile,
    Hypergraph,
    add_edge,
    berge_path_oracle,
    components,
    distance,
    distance_profile,
    find_good_edge,
    good_edges,
    is_connected,
    is_edge_minimal,
    parse,
    remove_edge,
    serialize,
    two_section,
    wiener,
)


class TestHypergraph:
    """Tests for the Hypergraph value."""

    def test_edges_are_normalized(self):
        h = Hypergraph(5, 3, ((5, 4, 3), (3, 2, 1)))
        assert h.edges == ((1, 2, 3), (3, 4, 5))

    def test_vertices(self):
        assert list(Hypergraph(4, 2).vertices) == [1, 2, 3, 4]

    def test_wrong_arity(self):
        with pytest.raises(InvalidHypergraph, match="expected 3"):
            Hypergraph(5, 3, ((1, 2),))

    def test_label_out_of_range(self):
        with pytest.raises(InvalidHypergraph, match="outside"):
            Hypergraph(3, 2, ((1, 4),))

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            Hypergraph(3, 2, ((1, 2), (2, 1)))

    def test_uniformity_above_order(self):
        with pytest.raises(InvalidHypergraph, match="Uniformity"):
            Hypergraph(2, 3)

    def test_is_hashable(self):
        assert len({tight_path(5, 3), tight_path(5, 3)}) == 1

    def test_restrict(self):
        h = tight_path(5, 3).restrict([3, 4, 5])
        assert h == Hypergraph(3, 3, ((1, 2, 3),))

    def test_restrict_drops_crossing_edges(self):
        h = tight_path(5, 3).restrict([1, 2, 4, 5])
        assert h.n == 4
        assert h.edges == ()

    def test_restrict_needs_k_vertices(self):
        with pytest.raises(InvalidParameters, match="at least k=3"):
            tight_path(5, 3).restrict([4, 5])
        with pytest.raises(VertexOutOfRange):
            tight_path(5, 3).restrict([1, 2, 9])

    def test_relabel_sequence(self):
        h = Hypergraph(3, 2, ((1, 2),)).relabel([3, 2, 1])
        assert h.edges == ((2, 3),)

    def test_relabel_not_bijection(self):
        with pytest.raises(InvalidHypergraph, match="bijection"):
            Hypergraph(3, 2, ((1, 2),)).relabel({1: 1, 2: 1, 3: 3})


class TestFileFormat:
    """Tests for parse and serialize."""

    def test_parse(self):
        h = parse("5 3\n1 2 3\n3 4 5\n")
        assert h == Hypergraph(5, 3, ((1, 2, 3), (3, 4, 5)))

    def test_parse_single_edge(self):
        assert parse("3 3\n1 2 3\n").edges == ((1, 2, 3),)

    def test_parse_without_trailing_newline(self):
        assert parse("3 2\n1 2").edges == ((1, 2),)

    def test_comments_and_blank_lines(self):
        h = parse("# a path\n\n3 2\n# first edge\n1 2\n\n2 3\n")
        assert h.edges == ((1, 2), (2, 3))

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "missing"),
            ("3\n", "malformed header"),
            ("3  2\n", "malformed header"),
            ("3 4\n", "1 <= k <= n"),
            ("3 2\n1 x\n", "malformed edge line"),
            ("3 2\n1 2 \n", "malformed edge line"),
            ("3 2\n1\n", "expected 2"),
            ("4 3\n1 2 2\n", "duplicate vertex within edge"),
            ("3 2\n1 4\n", "out of range"),
            ("3 2\n0 1\n", "out of range"),
            ("3 2\n2 1\n", "strictly increasing"),
            ("3 2\n1 2\n1 2\n", "duplicate edge"),
            ("\uff15 \uff13\n1 2 3\n3 4 5\n", "malformed header"),
            ("5 3\n1 2 3\n3 4 \u0665\n", "malformed edge line"),
        ],
    )
    def test_parse_errors(self, text: str, message: str):
        with pytest.raises(ParseError, match=message):
            parse(text)

    def test_parse_error_line_number(self):
        with pytest.raises(ParseError) as excinfo:
            parse("# header follows\n3 2\n1 2\n1 2\n")
        assert excinfo.value.line == 4
        assert excinfo.value.message.startswith("line 4: ")

    def test_serialize(self):
        assert serialize(tight_path(5, 3)) == "5 3\n1 2 3\n3 4 5\n"

    def test_serialize_without_edges(self):
        assert serialize(Hypergraph(3, 3)) == "3 3\n"

    def test_parse_serialize(self):
        h = complete(5, 3)
        assert parse(serialize(h)) == h


class TestConnectivity:
    """Tests for two_section, components and is_connected."""

    def test_two_section_single_edge(self):
        graph = two_section(Hypergraph(3, 3, ((1, 2, 3),)))
        assert sorted(graph.edges) == [(1, 2), (1, 3), (2, 3)]

    def test_two_section_tight_path(self):
        graph = two_section(tight_path(5, 3))
        edges = {tuple(sorted(e)) for e in graph.edges}
        assert edges == {(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)}

    def test_two_section_complete(self):
        assert nx.is_isomorphic(two_section(complete(5, 3)), nx.complete_graph(5))

    def test_components(self):
        h = Hypergraph(5, 3, ((1, 2, 3),))
        assert components(h) == [{1, 2, 3}, {4}, {5}]

    def test_components_connected(self):
        assert components(tight_path(5, 3)) == [{1, 2, 3, 4, 5}]

    def test_two_components(self):
        h = Hypergraph(6, 3, ((1, 2, 3), (4, 5, 6)))
        assert components(h) == [{1, 2, 3}, {4, 5, 6}]
        assert not is_connected(h)

    def test_is_connected(self):
        assert is_connected(tight_path(13, 4))

    def test_no_edges(self):
        assert not is_connected(Hypergraph(3, 3))

    def test_single_vertex(self):
        assert is_connected(Hypergraph(1, 1))


class TestDistance:
    """Tests for distance, the Berge path oracle and the Wiener index."""

    def test_tight_path_ends(self):
        assert distance(tight_path(5, 3), 1, 5) == 2

    def test_same_vertex(self):
        assert distance(tight_path(5, 3), 4, 4) == 0

    def test_long_tight_path(self):
        assert distance(tight_path(13, 4), 1, 13) == 6

    def test_unreachable(self):
        h = Hypergraph(4, 3, ((1, 2, 3),))
        assert distance(h, 1, 4) is UNREACHABLE
        assert str(distance(h, 1, 4)) == "unreachable"

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            distance(tight_path(5, 3), 0, 2)

    def test_oracle(self):
        assert berge_path_oracle(tight_path(5, 3), 2, 4) == 2
        assert berge_path_oracle(Hypergraph(3, 3, ((1, 2, 3),)), 1, 3) == 1

    def test_oracle_unreachable(self):
        assert berge_path_oracle(Hypergraph(4, 3, ((1, 2, 3),)), 1, 4) is UNREACHABLE

    def test_oracle_size_guard(self):
        with pytest.raises(SearchSpaceTooLarge, match="at most"):
            berge_path_oracle(complete(5, 3), 1, 2)

    def test_metric_axioms(self):
        h = tight_path(13, 4)
        for u, v in itertools.combinations(h.vertices, 2):
            assert distance(h, u, v) == distance(h, v, u)
        for u, v, w in itertools.permutations(range(1, 8), 3):
            assert distance(h, u, w) <= distance(h, u, v) + distance(h, v, w)  # type: ignore

    @pytest.mark.slow
    def test_oracle_on_random_instances(self, random_connected):
        rng = random.Random(20240517)
        for _ in range(1000):
            h = random_connected(rng)
            for u, v in itertools.combinations(h.vertices, 2):
                assert distance(h, u, v) == berge_path_oracle(h, u, v), h

    def test_wiener_values(self):
        assert wiener(complete(5, 3)) == 10
        assert wiener(Hypergraph(3, 3, ((1, 2, 3),))) == 3
        assert wiener(tight_path(5, 3)) == 14
        assert wiener(tight_path(13, 4)) == 185

    def test_wiener_disconnected(self):
        with pytest.raises(DisconnectedHypergraph, match="2 connected components"):
            wiener(Hypergraph(6, 3, ((1, 2, 3), (4, 5, 6))))

    def test_wiener_matches_networkx(self, random_connected):
        rng = random.Random(7)
        for _ in range(200):
            h = random_connected(rng)
            assert wiener(h) == nx.wiener_index(two_section(h))

    def test_wiener_lower_bound(self, random_connected):
        rng = random.Random(11)
        for _ in range(200):
            h = random_connected(rng)
            covered = {pair for edge in h.edges for pair in itertools.combinations(edge, 2)}
            all_pairs = len(covered) == h.n * (h.n - 1) // 2
            assert wiener(h) >= h.n * (h.n - 1) // 2
            assert (wiener(h) == h.n * (h.n - 1) // 2) == all_pairs

    @pytest.mark.slow
    def test_monotonicity(self, random_connected):
        rng = random.Random(42)
        trials = 0
        while trials < 10_000:
            h = random_connected(rng)
            absent = [
                e for e in itertools.combinations(h.vertices, h.k) if not h.has_edge(e)
            ]
            if not absent:
                continue
            trials += 1
            denser = add_edge(h, rng.choice(absent))
            assert wiener(denser) <= wiener(h)
            u, v = rng.sample(list(h.vertices), 2)
            assert distance(denser, u, v) <= distance(h, u, v)  # type: ignore


class TestDistanceProfile:
    """Tests for BFS layers."""

    def test_tight_path(self):
        profile = distance_profile(tight_path(5, 3), 1)
        assert profile.layer_sizes == (2, 2)
        assert profile.eccentricity == 2
        assert profile.distance_sum == 6

    def test_complete(self):
        profile = distance_profile(complete(6, 3), 1)
        assert profile.layer_sizes == (5,)
        assert profile.eccentricity == 1

    def test_long_tight_path(self):
        profile = distance_profile(tight_path(13, 4), 1)
        assert profile.layer_sizes == (3, 1, 3, 1, 3, 1)
        assert profile.eccentricity == 6

    def test_unreachable_count(self):
        profile = distance_profile(Hypergraph(5, 3, ((1, 2, 3),)), 1)
        assert profile.layer_sizes == (2,)
        assert profile.unreachable_count == 2
        assert profile.reachable_count + 1 + profile.unreachable_count == 5

    def test_distance_sum_matches_distances(self):
        h = tight_path(13, 4)
        for v in h.vertices:
            profile = distance_profile(h, v)
            assert profile.distance_sum == sum(distance(h, v, u) for u in h.vertices)

    def test_empty_layer_rejected(self):
        with pytest.raises(InvalidHypergraph, match="cannot be empty"):
            DistanceProfile(source=1, layer_sizes=(2, 0, 1))


class TestEdgeMinimality:
    """Tests for is_edge_minimal, good edges, add_edge and remove_edge."""

    def test_tight_path_is_minimal(self):
        assert is_edge_minimal(tight_path(5, 3))

    def test_complete_is_not_minimal(self):
        assert not is_edge_minimal(complete(5, 3))

    def test_fano_is_not_minimal(self):
        assert not is_edge_minimal(fano())

    def test_single_edge(self):
        h = Hypergraph(3, 3, ((1, 2, 3),))
        assert is_edge_minimal(h)
        assert find_good_edge(h) == (1, 2, 3)

    def test_minimality_needs_connected(self):
        with pytest.raises(DisconnectedHypergraph):
            is_edge_minimal(Hypergraph(6, 3, ((1, 2, 3), (4, 5, 6))))

    def test_find_good_edge(self):
        assert find_good_edge(tight_path(5, 3)) == (1, 2, 3)
        assert find_good_edge(tight_path(13, 4)) == (1, 2, 3, 4)

    def test_good_edges_of_long_path(self):
        # removing an inner edge leaves two components with more than one vertex
        assert good_edges(tight_path(13, 4)) == [(1, 2, 3, 4), (10, 11, 12, 13)]

    def test_find_good_edge_needs_minimal(self):
        with pytest.raises(NotEdgeMinimal):
            find_good_edge(complete(5, 3))

    def test_remove_edge(self):
        h = remove_edge(tight_path(5, 3), (3, 4, 5))
        assert components(h) == [{1, 2, 3}, {4}, {5}]

    def test_add_then_remove(self):
        h = tight_path(5, 3)
        assert remove_edge(add_edge(h, (1, 4, 5)), (5, 4, 1)) == h

    def test_add_edge_lowers_wiener(self):
        h = tight_path(5, 3)
        assert wiener(h) == 14
        assert wiener(add_edge(h, (1, 4, 5))) == 12

    def test_original_untouched(self):
        h = tight_path(5, 3)
        add_edge(h, (1, 4, 5))
        assert h.edges == ((1, 2, 3), (3, 4, 5))

    def test_add_duplicate(self):
        with pytest.raises(DuplicateEdge):
            add_edge(tight_path(5, 3), (1, 2, 3))

    def test_remove_missing(self):
        with pytest.raises(MissingEdge):
            remove_edge(tight_path(5, 3), (1, 4, 5))
