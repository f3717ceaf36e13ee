"""Bundle of quadrics: quadric count, (l0, l1, l2) decomposition and the balancedness verdict."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .invariants import (
    BundleProfile,
    GonalityInput,
    ResolutionProfile,
    SplittingType,
    balanced_splitting,
    beta_rank,
    binomial,
    deg_syzygy_closed,
    derive_geometry,
    scroll_splitting,
)

__all__ = [
    "VerdictTag",
    "Verdict",
    "QuadricDecomposition",
    "ModelViolation",
    "conic_discriminant4",
    "quadric_count_raw",
    "quadric_generator_count",
    "decompose_quadric_bundle",
    "classify",
    "conjecture_spread_bound",
    "conjecture_index_range",
    "full_profile",
]


class VerdictTag(str, Enum):
    UNBALANCED_N1 = "unbalanced_N1"
    BALANCED_N1 = "balanced_N1"
    BALANCED_N1_BOUNDARY = "balanced_N1_boundary"
    CONJECTURAL_BALANCED = "conjectural_balanced"
    OUT_OF_HYPOTHESIS = "out_of_hypothesis"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    tag: VerdictTag
    reason: str
    conic4: Optional[int] = None

    @property
    def is_theorem(self) -> bool:
        return self.tag in (
            VerdictTag.UNBALANCED_N1,
            VerdictTag.BALANCED_N1,
            VerdictTag.BALANCED_N1_BOUNDARY,
        )


class ModelViolation(ValueError):
    """The twist-multiplicity model for N_1 produced an impossible decomposition."""

    def __init__(self, message: str, **values: int) -> None:
        self.values = values
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"model violation: {message} ({detail})")


@dataclass(frozen=True)
class QuadricDecomposition:
    """Multiplicities of the twists 0, 1, 2 in N_1."""

    l0: int
    l1: int
    l2: int

    @property
    def rank(self) -> int:
        return self.l0 + self.l1 + self.l2

    @property
    def degree(self) -> int:
        return self.l1 + 2 * self.l2

    def splitting(self) -> SplittingType:
        return SplittingType.from_multiplicities({2: self.l2, 1: self.l1, 0: self.l0})


def conic_discriminant4(k: int, rho: int) -> int:
    """4 * ((k - rho - 7/2)^2 - 2k + 23/4), kept integral."""
    return (2 * k - 2 * rho - 7) ** 2 - 8 * k + 23


def quadric_count_raw(g: int, k: int) -> int:
    """C(g-k+2, 2) - h_{C'}(2): quadrics in P^{g-k} minus the residual curve's Hilbert value.

    May be negative; the residual curve has maximal rank, so a negative value
    means there are no quadrics.
    """
    return binomial(g - k + 2, 2) - 3 * g + 2 * k + 3


def quadric_generator_count(g: int, k: int, *, quadratic_l2: bool = False) -> int:
    """Number of quadrics containing the residual curve, which equals l2.

    ``quadratic_l2`` swaps in the value of the conic quadratic itself
    (``conic4 / 4``), which is twice the true count. It exists only so the
    self-test can demonstrate that this choice breaks the golden example.
    """
    if g <= k + 1:
        raise ValueError(f"residual map is birational only for g > k+1, got g={g}, k={k}")
    if quadratic_l2:
        c4 = conic_discriminant4(k, 2 * k - g - 2)
        return max(c4 // 4, 0)
    return max(quadric_count_raw(g, k), 0)


def decompose_quadric_bundle(g: int, k: int, *, quadratic_l2: bool = False) -> QuadricDecomposition:
    if g <= k + 1:
        raise ValueError(f"decomposition needs g > k+1, got g={g}, k={k}")
    if k < 4:
        raise ValueError(f"decomposition needs k >= 4, got k={k}")
    rho = 2 * k - g - 2
    if rho < 0:
        raise ValueError(f"decomposition needs rho >= 0, got rho={rho}")

    beta1 = beta_rank(1, k)
    deg1 = deg_syzygy_closed(1, g, k)
    l2 = quadric_generator_count(g, k, quadratic_l2=quadratic_l2)
    l1 = deg1 - 2 * l2
    l0 = beta1 - l1 - l2
    if min(l0, l1, l2) < 0:
        raise ModelViolation("negative multiplicity", k=k, rho=rho, l0=l0, l1=l1, l2=l2)
    if conic_discriminant4(k, rho) > 0 and l0 != binomial(rho + 1, 2):
        raise ModelViolation("l0 differs from C(rho+1, 2)", k=k, rho=rho, l0=l0, l1=l1, l2=l2)
    dec = QuadricDecomposition(l0, l1, l2)
    if l2 == 0 and dec.splitting() != balanced_splitting(deg1, beta1):
        raise ModelViolation("no quadrics but splitting is not balanced", k=k, rho=rho, l0=l0, l1=l1, l2=l2)
    return dec


def classify(g: int, k: int, *, quadratic_l2: bool = False) -> Verdict:
    rho = 2 * k - g - 2
    conic4 = conic_discriminant4(k, rho) if rho >= 0 else None
    if k < 4:
        return Verdict(VerdictTag.OUT_OF_HYPOTHESIS, f"k={k} < 4", conic4)
    if g <= k + 1:
        return Verdict(VerdictTag.OUT_OF_HYPOTHESIS, f"g={g} <= k+1={k + 1}", conic4)
    if rho < 0:
        return Verdict(VerdictTag.CONJECTURAL_BALANCED, f"rho={rho} < 0: N_1 conjectured balanced", None)

    assert conic4 is not None
    if rho > 0 and conic4 > 0:
        verdict = Verdict(VerdictTag.UNBALANCED_N1, "rho > 0 and the residual curve lies on a quadric", conic4)
    elif conic4 == 0:
        verdict = Verdict(VerdictTag.BALANCED_N1_BOUNDARY, "on the conic: no quadrics", conic4)
    elif conic4 < 0:
        verdict = Verdict(VerdictTag.BALANCED_N1, "outside the conic: no quadrics", conic4)
    else:
        verdict = Verdict(VerdictTag.BALANCED_N1, "rho = 0: no twist-0 summand", conic4)

    dec = decompose_quadric_bundle(g, k, quadratic_l2=quadratic_l2)
    unbalanced = dec.l0 > 0 and dec.l2 > 0
    if unbalanced != (verdict.tag is VerdictTag.UNBALANCED_N1):
        raise ModelViolation("verdict disagrees with decomposition", k=k, rho=rho, l0=dec.l0, l1=dec.l1, l2=dec.l2)
    return verdict


def conjecture_index_range(k: int) -> range:
    """Indices 2..ceil((k-3)/2) covered by the conjectural spread bound."""
    return range(2, -(-(k - 3) // 2) + 1)


def conjecture_spread_bound(i: int, g: int, k: int) -> int:
    """Conjectured sharp bound on the spread of N_i. Not a theorem."""
    if i not in conjecture_index_range(k):
        raise IndexError(f"index {i} outside the conjectured range for k={k}")
    return min(g - k - 1, i + 1)


def full_profile(g: int, k: int, *, quadratic_l2: bool = False) -> ResolutionProfile:
    if g < k + 1:
        raise ValueError(f"profile needs g >= k+1, got g={g}, k={k}")
    geo = derive_geometry(GonalityInput(g, k))
    verdict = classify(g, k, quadratic_l2=quadratic_l2)

    bundles = []
    for i in range(1, k - 1):
        rank = beta_rank(i, k)
        deg = deg_syzygy_closed(i, g, k)
        if i == k - 2:
            bundles.append(BundleProfile(i, rank, deg, SplittingType([deg]), "theorem"))
        elif i == 1 and verdict.is_theorem:
            split = decompose_quadric_bundle(g, k, quadratic_l2=quadratic_l2).splitting()
            bundles.append(BundleProfile(i, rank, deg, split, "theorem"))
        else:
            bundles.append(BundleProfile(i, rank, deg, balanced_splitting(deg, rank), "conjecture"))
    return ResolutionProfile(geometry=geo, scroll=scroll_splitting(geo), bundles=tuple(bundles))
