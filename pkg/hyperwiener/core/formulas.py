"""
Closed-form evaluators for the Wiener index of the extremal tight paths, the distance-sum
bounds used in the induction step, and the two identities closing it. All arithmetic is
exact integer arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from hyperwiener.core.errors import DomainError, InvalidParameters, NonIntegerResult

log = logging.getLogger("hyperwiener.core.formulas")

__all__ = (
    "BoundParams",
    "IdentitySweep",
    "f",
    "g1",
    "g2",
    "distance_sum_bound",
    "eccentricity_bound",
    "residual_a",
    "residual_b",
    "identity_residuals",
    "check_identities",
    "wmax",
)


@dataclass(frozen=True)
class BoundParams:
    """
    Parameters of the induction step: ``ell`` isolated vertices remain after removing a good
    edge and the big component has order n - ell = k * s_prime + r_prime.
    """

    ell: int
    s_prime: int
    r_prime: int

    @classmethod
    def of(cls, n: int, k: int, ell: int) -> BoundParams:
        if not 1 <= ell < k:
            raise InvalidParameters(f"Need 1 <= ell < k, got ell={ell} k={k}.")
        if n - ell < 0:
            raise InvalidParameters(f"Need ell <= n, got ell={ell} n={n}.")
        s_prime, r_prime = divmod(n - ell, k)
        return cls(ell=ell, s_prime=s_prime, r_prime=r_prime)

    def validate(self, k: int):
        if not 1 <= self.ell < k:
            raise InvalidParameters(f"Need 1 <= ell < k, got ell={self.ell} k={k}.")
        if not 0 <= self.r_prime < k:
            raise InvalidParameters(f"Need 0 <= r' < k, got r'={self.r_prime} k={k}.")
        if self.s_prime < 0:
            raise InvalidParameters(f"Need s' >= 0, got s'={self.s_prime}.")


def _check_path_args(s: int, k: int, r: int):
    if s < 0 or k < 2 or not 0 <= r < k:
        raise InvalidParameters(f"Need s >= 0, k >= 2 and 0 <= r < k, got s={s} k={k} r={r}.")


def _check_bound_args(ell: int, k: int, s: int, r: int):
    _check_path_args(s, k, r)
    if not 1 <= ell < k:
        raise InvalidParameters(f"Need 1 <= ell < k, got ell={ell} k={k}.")


def _f(s: int, k: int, r: int) -> int:
    # 6 f = 2k^2 s^3 + 6rk s^2 + 6r^2 s + (k^2 - 3k) s + 3r(r - 1)
    numerator = 2 * k * k * s**3 + 6 * r * k * s * s + 6 * r * r * s + (k * k - 3 * k) * s
    numerator += 3 * r * (r - 1)
    value, rest = divmod(numerator, 6)
    if rest:
        raise NonIntegerResult(f"f({s}, {k}, {r}) is not an integer ({numerator}/6).")
    return value


def f(s: int, k: int, r: int) -> int:
    """
    Wiener index of the extremal tight path of order n = k * s + r.
    """
    _check_path_args(s, k, r)
    return _f(s, k, r)


def g1(ell: int, k: int, s: int, r: int) -> int:
    _check_bound_args(ell, k, s, r)
    return k * s * s + ell * s + r * (2 * s + 1)


def g2(ell: int, k: int, s: int, r: int) -> int:
    _check_bound_args(ell, k, s, r)
    return k * s * s + ell * s + 2 * r * s


def distance_sum_bound(params: BoundParams, k: int) -> int:
    """
    Upper bound on the distance sum from an isolated vertex to the big component.
    """
    params.validate(k)
    if k - params.ell <= params.r_prime:
        return g1(params.ell, k, params.s_prime, params.r_prime)
    return g2(params.ell, k, params.s_prime, params.r_prime)


def eccentricity_bound(params: BoundParams, k: int) -> int:
    """
    Upper bound on the eccentricity of an isolated vertex measured over the big component.
    """
    params.validate(k)
    if params.r_prime < k - params.ell:
        return 2 * params.s_prime
    return 2 * params.s_prime + 1


def residual_a(s: int, k: int, r: int, ell: int) -> int:
    """
    f(s+1, k, r+ell-k) - (f(s, k, r) + ell * g1 + C(ell, 2)); equals (k-ell-r)^2.

    Raises
    ------
    DomainError
        r + ell < k, where this case does not apply.
    """
    _check_bound_args(ell, k, s, r)
    if r + ell < k:
        raise DomainError(f"Case A needs r + ell >= k, got r={r} ell={ell} k={k}.")
    return _f(s + 1, k, r + ell - k) - (_f(s, k, r) + ell * g1(ell, k, s, r) + comb(ell, 2))


def residual_b(s: int, k: int, r: int, ell: int) -> int:
    """
    f(s, k, r+ell) - (f(s, k, r) + ell * g2 + C(ell, 2)); equals ell * r.

    Raises
    ------
    DomainError
        r + ell >= k, where this case does not apply.
    """
    _check_bound_args(ell, k, s, r)
    if r + ell >= k:
        raise DomainError(f"Case B needs r + ell < k, got r={r} ell={ell} k={k}.")
    return _f(s, k, r + ell) - (_f(s, k, r) + ell * g2(ell, k, s, r) + comb(ell, 2))


def identity_residuals(s: int, k: int, r: int, ell: int) -> tuple[int | None, int | None]:
    """
    Both residuals for one tuple; the case that does not apply is None. Exactly one of the two
    is set for any valid tuple. Use ``residual_a`` / ``residual_b`` to get a DomainError
    instead.
    """
    _check_bound_args(ell, k, s, r)
    if r + ell >= k:
        return residual_a(s, k, r, ell), None
    return None, residual_b(s, k, r, ell)


@dataclass(frozen=True)
class IdentitySweep:
    """
    Outcome of ``check_identities``.

    Attributes
    ----------
    count: int
        Number of (s, k, r, ell) tuples checked
    failure: tuple[int, int, int, int, str, int, int] | None
        First failing tuple as (s, k, r, ell, case, residual, expected), None if all passed
    """

    count: int
    failure: tuple[int, int, int, int, str, int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def check_identities(s_max: int, k_max: int) -> IdentitySweep:
    """
    Check both identities on every valid tuple with 0 <= s <= s_max and 2 <= k <= k_max.
    Stops at the first failure.
    """
    if s_max < 0 or k_max < 2:
        raise InvalidParameters(f"Need s_max >= 0 and k_max >= 2, got {s_max} and {k_max}.")
    count = 0
    for k in range(2, k_max + 1):
        for s in range(s_max + 1):
            for r in range(k):
                for ell in range(1, k):
                    count += 1
                    if r + ell >= k:
                        case = "A"
                        residual, expected = residual_a(s, k, r, ell), (k - ell - r) ** 2
                    else:
                        case = "B"
                        residual, expected = residual_b(s, k, r, ell), ell * r
                    if residual != expected:
                        log.warning(
                            f"Identity {case} fails at s={s} k={k} r={r} ell={ell}: "
                            f"{residual} != {expected}"
                        )
                        return IdentitySweep(count, (s, k, r, ell, case, residual, expected))
    log.info(f"Identities hold on {count} tuples.")
    return IdentitySweep(count)


def wmax(n: int, k: int) -> int:
    """
    The maximum Wiener index of a connected k-uniform hypergraph of order n.
    """
    if k < 2 or n < k:
        raise InvalidParameters(f"Need 2 <= k <= n, got n={n} k={k}.")
    s, r = divmod(n, k)
    return _f(s, k, r)
