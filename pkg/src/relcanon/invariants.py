"""Closed-form invariants of relative canonical resolutions.

Everything here is exact integer arithmetic. A pair ``(g, k)`` is a genus and
the degree of a pencil on a general curve of that genus; the curve sits on a
rational normal scroll of dimension ``k - 1`` and degree ``g - k + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "GonalityInput",
    "Geometry",
    "SplittingType",
    "BundleProfile",
    "ResolutionProfile",
    "binomial",
    "derive_geometry",
    "beta_rank",
    "beta_rank_alt",
    "deg_syzygy_closed",
    "balanced_splitting",
    "scroll_splitting",
    "duality_transform",
    "hilbert_value_residual",
]


def binomial(n: int, r: int) -> int:
    """C(n, r), zero outside ``0 <= r <= n``. Negative ``n`` is rejected."""
    if n < 0:
        raise ValueError(f"binomial with negative top argument n={n}")
    if r < 0 or r > n:
        return 0
    r = min(r, n - r)
    out = 1
    for j in range(1, r + 1):
        out = out * (n - r + j) // j
    return out


def _exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


@dataclass(frozen=True)
class GonalityInput:
    g: int
    k: int

    def __post_init__(self) -> None:
        for name in ("g", "k"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {v!r}")
        if self.g < 4:
            raise ValueError(f"genus must be >= 4, got g={self.g}")
        if self.k < 3:
            raise ValueError(f"pencil degree must be >= 3, got k={self.k}")


@dataclass(frozen=True)
class Geometry:
    g: int
    k: int
    rho: int
    d: int
    f: int
    residual_degree: int
    residual_h0: int
    hypothesis_ok: bool


@dataclass(frozen=True)
class SplittingType:
    """Twists of a split bundle on P^1.

    Stored as ``(twist, multiplicity)`` pairs in decreasing twist order so that
    balanced splittings of very large rank stay cheap; ``twists`` expands them
    into the sorted non-increasing multiset.
    """

    counts: tuple[tuple[int, int], ...] = ()

    def __init__(self, twists: Iterable[int] = ()) -> None:
        tally: dict[int, int] = {}
        for t in twists:
            tally[int(t)] = tally.get(int(t), 0) + 1
        object.__setattr__(self, "counts", tuple(sorted(tally.items(), reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult):
        """Build from a ``{twist: multiplicity}`` mapping or an iterable of pairs."""
        items = mult.items() if isinstance(mult, dict) else mult
        tally: dict[int, int] = {}
        for t, m in items:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for twist {t}")
            if m:
                tally[int(t)] = tally.get(int(t), 0) + int(m)
        obj = cls.__new__(cls)
        object.__setattr__(obj, "counts", tuple(sorted(tally.items(), reverse=True)))
        return obj

    @property
    def twists(self) -> tuple[int, ...]:
        return tuple(t for t, m in self.counts for _ in range(m))

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.counts)

    @property
    def degree(self) -> int:
        return sum(t * m for t, m in self.counts)

    @property
    def spread(self) -> int:
        if not self.counts:
            return 0
        return self.counts[0][0] - self.counts[-1][0]

    @property
    def is_balanced(self) -> bool:
        return self.spread <= 1

    def multiplicities(self) -> dict[int, int]:
        """Twist -> multiplicity, in decreasing twist order."""
        return dict(self.counts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{t}^{m}" for t, m in self.counts) + "}"


@dataclass(frozen=True)
class BundleProfile:
    index: int
    rank: int
    degree: int
    predicted_splitting: SplittingType
    provenance: str  # "theorem" or "conjecture"

    def __post_init__(self) -> None:
        if self.provenance not in ("theorem", "conjecture"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.predicted_splitting.rank != self.rank or self.predicted_splitting.degree != self.degree:
            raise ValueError(
                f"splitting {self.predicted_splitting} does not match rank {self.rank}, degree {self.degree}"
            )


@dataclass(frozen=True)
class ResolutionProfile:
    geometry: Geometry
    scroll: SplittingType
    bundles: tuple[BundleProfile, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        k = self.geometry.k
        if len(self.bundles) != k - 2:
            raise ValueError(f"expected {k - 2} bundles, got {len(self.bundles)}")
        last = self.bundles[-1]
        if last.rank != 1 or last.degree != self.geometry.f - 2:
            raise ValueError("last syzygy bundle must have rank 1 and degree f-2")

    def bundle(self, i: int) -> BundleProfile:
        return self.bundles[i - 1]


def derive_geometry(inp: GonalityInput) -> Geometry:
    g, k = inp.g, inp.k
    rho = 2 * k - g - 2
    f = g - k + 1
    return Geometry(
        g=g,
        k=k,
        rho=rho,
        d=k - 1,
        f=f,
        residual_degree=2 * g - 2 - k,
        residual_h0=f,
        hypothesis_ok=rho >= 0 and g > k + 1,
    )


def _check_index(i: int, k: int, lo: int = 0) -> None:
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if not lo <= i <= k - 2:
        raise IndexError(f"syzygy index {i} outside {lo}..{k - 2} for k={k}")


def beta_rank(i: int, k: int) -> int:
    """Rank of the i-th syzygy bundle, ``i(k-2-i)/(k-1) * C(k, i+1)``.

    The ends of the resolution are line bundles, so ``i = 0`` and
    ``i = k - 2`` both give 1.
    """
    _check_index(i, k)
    if i == 0 or i == k - 2:
        return 1
    return _exact_div(i * (k - 2 - i) * binomial(k, i + 1), k - 1)


def beta_rank_alt(i: int, k: int) -> int:
    """The same rank written as ``k/(i+1) * (k-2-i) * C(k-2, i-1)``."""
    _check_index(i, k)
    if i == 0 or i == k - 2:
        return 1
    return _exact_div(k * (k - 2 - i) * binomial(k - 2, i - 1), i + 1)


def deg_syzygy_closed(i: int, g: int, k: int) -> int:
    _check_index(i, k, lo=1)
    if i == k - 2:
        # the closed formula vanishes here; self-duality with O forces f - 2
        return g - k - 1
    return (g - k - 1) * (k - 2 - i) * binomial(k - 2, i - 1)


def balanced_splitting(degree: int, rank: int) -> SplittingType:
    if rank < 0 or degree < 0:
        raise ValueError(f"rank and degree must be non-negative, got rank={rank}, degree={degree}")
    if rank == 0:
        if degree != 0:
            raise ValueError(f"rank 0 bundle cannot have degree {degree}")
        return SplittingType()
    q, r = divmod(degree, rank)
    return SplittingType.from_multiplicities({q + 1: r, q: rank - r})


def scroll_splitting(geometry: Geometry) -> SplittingType:
    return balanced_splitting(geometry.f, geometry.d)


def duality_transform(i: int, g: int, k: int, beta_i: int, deg_i: int) -> tuple[int, int]:
    """Rank and degree of N_{k-2-i} forced by self-duality of the resolution."""
    _check_index(i, k)
    f = g - k + 1
    return beta_i, (f - 2) * beta_i - deg_i


def hilbert_value_residual(n: int, g: int, k: int) -> int:
    """Hilbert polynomial of the residual curve in P^{g-k}, evaluated at n."""
    return (2 * g - k - 2) * n + 1 - g
