"""Cohomology on the scroll and the Euler-characteristic recursion for syzygy degrees.

The functions here recompute the syzygy degrees from scratch by imposing
``chi(O_C(nu)) = sum_i (-1)^i chi(F_i(nu))`` one twist at a time. Nothing in
this module calls :func:`relcanon.invariants.deg_syzygy_closed`; it is the
independent check on that formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from .invariants import SplittingType, beta_rank, binomial

__all__ = [
    "P1BundleSum",
    "PEClass",
    "UnsupportedBranchError",
    "cohomology_p1",
    "sym_power",
    "cohomology_scrollbundle",
    "chi_scrollbundle",
    "chi_term",
    "chi_curve",
    "recover_degrees",
    "euler_identity_defect",
]


class UnsupportedBranchError(ValueError):
    """Raised for classes aH + bR with a <= -k."""


class P1BundleSum(SplittingType):
    """A direct sum of line bundles on P^1."""

    def twist(self, b: int) -> "P1BundleSum":
        return P1BundleSum.from_multiplicities((t + b, m) for t, m in self.counts)


@dataclass(frozen=True)
class PEClass:
    a: int  # coefficient of the hyperplane class H
    b: int  # coefficient of the ruling R


def cohomology_p1(bundle: SplittingType, i: int) -> int:
    if i == 0:
        return sum(m * max(t + 1, 0) for t, m in bundle.counts)
    if i == 1:
        return sum(m * max(-t - 1, 0) for t, m in bundle.counts)
    return 0


def sym_power(e: SplittingType, a: int) -> P1BundleSum:
    """Splitting of S_a(E): one twist per degree-a monomial in the summands of E."""
    if a < 0:
        raise ValueError(f"symmetric power must be non-negative, got a={a}")
    return P1BundleSum(sum(m) for m in combinations_with_replacement(e.twists, a))


def cohomology_scrollbundle(c: PEClass, e: SplittingType, i: int) -> int:
    """h^i of O(aH + bR) on the projective bundle P(E) over P^1.

    Only ``a > -k`` is supported, where ``k - 1 = rank(E)``. For ``a >= 0`` the
    pushforward to P^1 is S_a(E)(b) with no higher direct images, so every
    ``b`` is accepted.
    """
    k = e.rank + 1
    if c.a <= -k:
        raise UnsupportedBranchError(f"unsupported branch: a={c.a} <= -k={-k}")
    if c.a < 0:
        return 0
    return cohomology_p1(sym_power(e, c.a).twist(c.b), i)


def chi_scrollbundle(c: PEClass, e: SplittingType) -> int:
    k = e.rank + 1
    return sum((-1) ** i * cohomology_scrollbundle(c, e, i) for i in range(k))


def chi_term(i: int, n: int, k: int, f: int, deg_n_i: int = 0, beta_i: int = 0) -> int:
    """chi(F_i(n+1)) for the relative canonical resolution of a curve of gonality k."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not 0 <= i <= k - 2:
        raise IndexError(f"resolution index {i} outside 0..{k - 2}")
    if i == 0:
        return binomial(k - 1 + n, k - 2) + f * binomial(k - 1 + n, k - 1)
    if i <= n:
        m = k - 2 + n - i
        return (deg_n_i + beta_i) * binomial(m, k - 2) + beta_i * f * binomial(m, k - 1)
    return 0


def chi_curve(nu: int, g: int) -> int:
    """Riemann-Roch: chi(O_C(nu)) = (2nu - 1)(g - 1) for the canonical curve."""
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    n = nu - 1
    return (2 * n + 1) * (g - 1)


def _alternating_sum(g: int, k: int, n: int, degrees: Sequence[int]) -> int:
    f = g - k + 1
    total = 0
    for i in range(n + 1):
        deg = degrees[i - 1] if i else 0
        beta = beta_rank(i, k) if i else 0
        total += (-1) ** i * chi_term(i, n, k, f, deg, beta)
    return total


def recover_degrees(g: int, k: int) -> list[int]:
    """deg N_1, ..., deg N_{k-3} solved step by step from the Euler identity."""
    if k < 4:
        raise ValueError(f"recursion needs k >= 4, got {k}")
    if g < k + 1:
        raise ValueError(f"recursion needs g >= k+1, got g={g}, k={k}")
    degrees: list[int] = []
    for n in range(1, k - 2):
        rest = _alternating_sum(g, k, n, degrees + [0])
        # deg N_n enters with coefficient (-1)^n * C(k-2, k-2)
        coeff = (-1) ** n * binomial(k - 2, k - 2)
        q, r = divmod(chi_curve(n + 1, g) - rest, coeff)
        if r:
            raise ArithmeticError(f"non-integral degree at n={n} for (g, k)=({g}, {k})")
        degrees.append(q)
        if _alternating_sum(g, k, n, degrees) != chi_curve(n + 1, g):
            raise ArithmeticError(f"inconsistent solve at n={n} for (g, k)=({g}, {k})")
    return degrees


def euler_identity_defect(g: int, k: int, nu: int, degrees: Sequence[int]) -> int:
    """chi(O_C(nu)) minus the alternating sum of chi(F_i(nu)); zero for the true degrees."""
    if not 2 <= nu <= k - 2:
        raise ValueError(f"nu={nu} outside 2..{k - 2}")
    n = nu - 1
    if len(degrees) < n:
        raise ValueError(f"need degrees of N_1..N_{n}, got {len(degrees)}")
    return chi_curve(nu, g) - _alternating_sum(g, k, n, degrees)
