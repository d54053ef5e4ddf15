"""Tests for the closed forms, the distance-sum bounds and the closing identities."""

from math import comb

import pytest

from hyperwiener.core.errors import DomainError, InvalidParameters
from hyperwiener.core.families import extremal_path, tight_path
from hyperwiener.core.formulas import (
    BoundParams,
    check_identities,
    distance_sum_bound,
    eccentricity_bound,
    f,
    g1,
    g2,
    identity_residuals,
    residual_a,
    residual_b,
    wmax,
)
from hyperwiener.core.hypergraph import (
    distance,
    distance_profile,
    find_good_edge,
    remove_edge,
    wiener,
)


class TestClosedForm:
    """Tests for f and wmax."""

    def test_values(self):
        assert f(1, 2, 1) == 4
        assert f(3, 4, 1) == 185
        assert f(2, 3, 0) == 24

    def test_single_edge(self):
        for k in range(2, 12):
            assert f(1, k, 0) == comb(k, 2)
            assert wmax(k, k) == comb(k, 2)

    def test_graph_path(self):
        for s in range(0, 20):
            for r in (0, 1):
                n = 2 * s + r
                assert f(s, 2, r) == (n**3 - n) // 6

    def test_bad_arguments(self):
        with pytest.raises(InvalidParameters):
            f(1, 4, 4)
        with pytest.raises(InvalidParameters):
            f(-1, 4, 0)
        with pytest.raises(InvalidParameters):
            f(1, 1, 0)

    def test_wmax(self):
        assert wmax(13, 4) == 185
        assert wmax(6, 3) == 24

    def test_wmax_domain(self):
        with pytest.raises(InvalidParameters):
            wmax(3, 4)
        with pytest.raises(InvalidParameters):
            wmax(5, 1)

    def test_formula_matches_bfs(self):
        for k in range(2, 7):
            for n in range(k, 41):
                assert wiener(extremal_path(n, k)) == wmax(n, k), (n, k)


class TestBounds:
    """Tests for g1, g2 and the two bounds of the induction step."""

    def test_g1(self):
        assert g1(1, 4, 3, 1) == 46
        for ell in range(1, 4):
            for r in range(4):
                assert g1(ell, 4, 0, r) == r

    def test_g1_g2_agree_without_remainder(self):
        for ell in range(1, 5):
            for s in range(6):
                assert g1(ell, 5, s, 0) == g2(ell, 5, s, 0) == 5 * s * s + ell * s

    def test_ell_out_of_range(self):
        with pytest.raises(InvalidParameters, match="ell"):
            g1(4, 4, 1, 0)
        with pytest.raises(InvalidParameters, match="ell"):
            g2(0, 4, 1, 0)

    def test_bound_params(self):
        assert BoundParams.of(13, 4, 1) == BoundParams(ell=1, s_prime=3, r_prime=0)
        with pytest.raises(InvalidParameters):
            BoundParams.of(13, 4, 4)

    def test_distance_sum_bound_g1_case(self):
        assert distance_sum_bound(BoundParams(ell=2, s_prime=1, r_prime=1), 3) == 8

    def test_distance_sum_bound_g2_case(self):
        assert distance_sum_bound(BoundParams(ell=1, s_prime=3, r_prime=0), 4) == 39

    def test_distance_sum_bound_small(self):
        assert distance_sum_bound(BoundParams(ell=1, s_prime=0, r_prime=2), 3) == 2
        assert distance_sum_bound(BoundParams(ell=2, s_prime=0, r_prime=0), 3) == 0

    def test_eccentricity_bound(self):
        assert eccentricity_bound(BoundParams(ell=1, s_prime=3, r_prime=0), 4) == 6
        assert eccentricity_bound(BoundParams(ell=2, s_prime=1, r_prime=1), 3) == 3
        assert eccentricity_bound(BoundParams(ell=1, s_prime=0, r_prime=0), 3) == 0

    def test_bad_params(self):
        with pytest.raises(InvalidParameters, match="r'"):
            distance_sum_bound(BoundParams(ell=1, s_prime=1, r_prime=4), 4)

    def test_bounds_tight_on_tight_path(self):
        h = tight_path(13, 4)
        edge = find_good_edge(h)
        assert edge == (1, 2, 3, 4)
        params = BoundParams.of(13, 4, 1)
        core = range(2, 14)
        assert sum(distance(h, 1, u) for u in core) == distance_sum_bound(params, 4) == 39
        assert distance_profile(h, 1).eccentricity == eccentricity_bound(params, 4) == 6
        smaller = remove_edge(h, edge).restrict(core)
        assert wiener(h) == wiener(smaller) + 39 == 185

    def test_bounds_on_short_path(self):
        h = tight_path(5, 3)
        params = BoundParams.of(5, 3, 2)
        assert params == BoundParams(ell=2, s_prime=1, r_prime=0)
        assert sum(distance(h, 4, u) for u in (1, 2, 3)) == distance_sum_bound(params, 3) == 5


class TestIdentities:
    """Tests for the two residuals closing the induction step."""

    def test_case_a(self):
        assert residual_a(2, 4, 3, 1) == 0
        assert identity_residuals(2, 4, 3, 1) == (0, None)

    def test_case_b(self):
        assert residual_b(2, 4, 0, 1) == 0
        assert residual_b(1, 5, 1, 2) == 2
        assert identity_residuals(1, 5, 1, 2) == (None, 2)

    def test_domain_errors(self):
        with pytest.raises(DomainError, match="Case A"):
            residual_a(1, 5, 1, 2)
        with pytest.raises(DomainError, match="Case B"):
            residual_b(2, 4, 3, 1)

    def test_full_grid(self):
        for k in range(2, 9):
            for s in range(11):
                for r in range(k):
                    for ell in range(1, k):
                        a, b = identity_residuals(s, k, r, ell)
                        if r + ell >= k:
                            assert a == (k - ell - r) ** 2 and b is None
                        else:
                            assert b == ell * r and a is None

    def test_check_identities(self):
        sweep = check_identities(10, 8)
        assert sweep.ok
        assert sweep.count == 1848

    def test_check_identities_small_grid(self):
        assert check_identities(1, 3).count == 16
        assert check_identities(0, 2).count == 2

    def test_check_identities_bad_grid(self):
        with pytest.raises(InvalidParameters):
            check_identities(-1, 8)
