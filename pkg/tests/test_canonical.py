"""Tests for canonical forms."""

import itertools
import random

import networkx as nx
import pytest

from hyperwiener.core.canonical import CanonicalForm, canonical_form
from hyperwiener.core.errors import OrderTooLarge
from hyperwiener.core.families import complete, fano, loose_path, offset_tight_path, tight_path
from hyperwiener.core.hypergraph import Hypergraph, two_section


def brute_force_form(h: Hypergraph) -> tuple:
    return min(
        tuple(sorted(tuple(sorted(perm[v - 1] for v in edge)) for edge in h.edges))
        for perm in itertools.permutations(h.vertices)
    )


class TestCanonicalForm:
    """Tests for canonical_form."""

    def test_tight_path(self):
        assert canonical_form(tight_path(5, 3)).edges == ((1, 2, 3), (1, 4, 5))

    def test_offset_path(self):
        form = canonical_form(offset_tight_path(6, 3, 1))
        assert form.edges == ((1, 2, 3), (1, 2, 4), (3, 5, 6))

    def test_reversal(self):
        for k in range(2, 6):
            for n in range(k, 11, k):
                for x in range(1, k):
                    assert canonical_form(offset_tight_path(n, k, x)) == canonical_form(
                        offset_tight_path(n, k, k - x)
                    )

    def test_relabel_invariance(self):
        rng = random.Random(3)
        h = tight_path(5, 3)
        for perm in itertools.permutations(h.vertices):
            assert canonical_form(h.relabel(list(perm))) == canonical_form(h)
        g = loose_path(10, 4)
        for _ in range(20):
            perm = list(g.vertices)
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == canonical_form(g)

    def test_matches_brute_force(self, random_connected):
        rng = random.Random(5)
        checked = 0
        while checked < 60:
            h = random_connected(rng)
            if h.n > 7:
                continue
            checked += 1
            assert canonical_form(h).edges == brute_force_form(h)

    def test_equal_forms_have_isomorphic_two_sections(self, random_connected):
        rng = random.Random(9)
        samples = [random_connected(rng) for _ in range(40)]
        for a, b in itertools.combinations(samples, 2):
            if canonical_form(a) == canonical_form(b):
                assert nx.is_isomorphic(two_section(a), two_section(b))

    def test_relabeled_samples_share_form(self, random_connected):
        rng = random.Random(11)
        for _ in range(40):
            h = random_connected(rng)
            perm = list(h.vertices)
            rng.shuffle(perm)
            relabeled = h.relabel(perm)
            assert canonical_form(relabeled) == canonical_form(h)

    def test_symmetric_instances(self):
        assert canonical_form(complete(6, 3)).edges == complete(6, 3).edges
        assert len(canonical_form(fano()).edges) == 7

    def test_no_edges(self):
        assert canonical_form(Hypergraph(4, 2)) == CanonicalForm(4, 2, ())

    def test_to_hypergraph(self):
        form = canonical_form(tight_path(5, 3))
        assert form.to_hypergraph() == Hypergraph(5, 3, ((1, 2, 3), (1, 4, 5)))

    def test_ordering(self):
        assert CanonicalForm(5, 3, ((1, 2, 3), (1, 4, 5))) < CanonicalForm(
            5, 3, ((1, 2, 3), (2, 4, 5))
        )

    def test_order_too_large(self):
        with pytest.raises(OrderTooLarge, match="n <= 10"):
            canonical_form(offset_tight_path(12, 4, 2))
