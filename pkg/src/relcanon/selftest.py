"""Invariant suites run by ``relcanon selftest``."""

from __future__ import annotations

from typing import Callable, Iterator

from .classifier import (
    ModelViolation,
    VerdictTag,
    classify,
    conic_discriminant4,
    decompose_quadric_bundle,
    full_profile,
    quadric_count_raw,
)
from .cohomology import (
    PEClass,
    cohomology_p1,
    cohomology_scrollbundle,
    euler_identity_defect,
    recover_degrees,
)
from .invariants import (
    GonalityInput,
    SplittingType,
    balanced_splitting,
    beta_rank,
    beta_rank_alt,
    binomial,
    deg_syzygy_closed,
    derive_geometry,
    duality_transform,
    hilbert_value_residual,
    scroll_splitting,
)
from .sweep import emit_table, parse_csv, sweep_region

Check = Callable[[bool], Iterator[str]]


def _golden(quadratic_l2: bool) -> Iterator[str]:
    g, k = 19, 11
    prof = full_profile(g, k, quadratic_l2=quadratic_l2)
    dec = decompose_quadric_bundle(g, k, quadratic_l2=quadratic_l2)
    if (dec.l0, dec.l1, dec.l2) != (1, 30, 13):
        yield f"(l0, l1, l2) = {(dec.l0, dec.l1, dec.l2)}, expected (1, 30, 13)"
    if classify(g, k, quadratic_l2=quadratic_l2).tag is not VerdictTag.UNBALANCED_N1:
        yield "golden verdict is not unbalanced_N1"
    b1, b2 = prof.bundle(1), prof.bundle(2)
    if (b1.rank, b1.degree, b2.rank, b2.degree) != (44, 56, 231, 441):
        yield f"golden ranks/degrees {(b1.rank, b1.degree, b2.rank, b2.degree)}"
    if prof.scroll.twists != (1,) * 9 + (0,):
        yield f"golden scroll {prof.scroll}"


def _ranks(_: bool) -> Iterator[str]:
    for k in range(4, 41):
        for i in range(0, k - 1):
            if beta_rank(i, k) != beta_rank_alt(i, k):
                yield f"beta formulas disagree at i={i}, k={k}"
            if beta_rank(k - 2 - i, k) != beta_rank(i, k):
                yield f"beta not symmetric at i={i}, k={k}"


def _duality(_: bool) -> Iterator[str]:
    for k in range(4, 41):
        for g in range(k + 2, 3 * k + 1):
            for i in range(1, k - 2):
                _, dual = duality_transform(i, g, k, beta_rank(i, k), deg_syzygy_closed(i, g, k))
                if dual != deg_syzygy_closed(k - 2 - i, g, k):
                    yield f"degree duality fails at i={i}, g={g}, k={k}"


def _oracle(_: bool) -> Iterator[str]:
    for k in range(4, 26):
        for g in range(k + 1, 3 * k + 1):
            closed = [deg_syzygy_closed(i, g, k) for i in range(1, k - 2)]
            if recover_degrees(g, k) != closed:
                yield f"recursion disagrees with closed degrees at g={g}, k={k}"
            for nu in range(2, k - 1):
                if euler_identity_defect(g, k, nu, closed):
                    yield f"Euler defect nonzero at g={g}, k={k}, nu={nu}"


def _splittings(_: bool) -> Iterator[str]:
    for rank in range(0, 30):
        for degree in range(0, 90 if rank else 1):
            s = balanced_splitting(degree, rank)
            if s.rank != rank or s.degree != degree or s.spread > 1:
                yield f"balanced_splitting({degree}, {rank}) = {s}"
    for k in range(3, 30):
        for g in range(max(4, k + 1), 3 * k + 1):
            geo = derive_geometry(GonalityInput(g, k))
            s = scroll_splitting(geo)
            if s.rank != geo.d or s.degree != geo.f:
                yield f"scroll splitting wrong at g={g}, k={k}"
            if k <= 12 and cohomology_scrollbundle(PEClass(1, 0), s, 0) != g:
                yield f"h0(O(H)) != g at g={g}, k={k}"
            if g > k + 1:
                raw = binomial(g - k + 2, 2) - hilbert_value_residual(2, g, k)
                if raw != quadric_count_raw(g, k):
                    yield f"quadric count mismatch at g={g}, k={k}"
    for twists in ([3, -1, 0], [-3], [0, 0], [5, -7, 2, -1]):
        b = SplittingType(twists)
        if cohomology_p1(b, 0) - cohomology_p1(b, 1) != b.degree + b.rank:
            yield f"Euler relation fails on P^1 for {b}"


def _classifier(quadratic_l2: bool) -> Iterator[str]:
    for k in range(4, 61):
        for rho in range(0, k - 3):
            g = 2 * k - rho - 2
            c4 = conic_discriminant4(k, rho)
            if c4 != 8 * quadric_count_raw(g, k):
                yield f"scaling identity fails at k={k}, rho={rho}"
            try:
                dec = decompose_quadric_bundle(g, k, quadratic_l2=quadratic_l2)
                tag = classify(g, k, quadratic_l2=quadratic_l2).tag
            except ModelViolation as exc:
                yield str(exc)
                continue
            if tag is VerdictTag.UNBALANCED_N1 and 2 * dec.l0 != rho * (rho + 1):
                yield f"l0 != C(rho+1, 2) at k={k}, rho={rho}"
            if rho == 0 and not dec.splitting().is_balanced:
                yield f"N_1 unbalanced at rho=0, k={k}"
            if rho == 0 and c4 >= 0 and dec.l0:
                yield f"l0 nonzero at rho=0, k={k}"
            if (tag is VerdictTag.UNBALANCED_N1) != (rho >= 1 and c4 > 0):
                yield f"verdict off the conic region at k={k}, rho={rho}"


def _io(_: bool) -> Iterator[str]:
    recs = sweep_region(4, 20, -3, 20, include_infeasible=True)
    if parse_csv(emit_table(recs, "csv")) != recs:
        yield "CSV round trip is lossy"


SUITES: dict[str, Check] = {
    "golden g=19 k=11": _golden,
    "rank formulas and symmetry": _ranks,
    "degree duality": _duality,
    "Euler recursion oracle": _oracle,
    "splittings and cohomology": _splittings,
    "classifier over sweep grid": _classifier,
    "CSV round trip": _io,
}


def run(quadratic_l2: bool = False) -> list[tuple[str, list[str]]]:
    """Run every suite; returns (name, failures) pairs in a fixed order."""
    results = []
    for name, suite in SUITES.items():
        try:
            failures = list(suite(quadratic_l2))
        except (ArithmeticError, ValueError) as exc:
            failures = [f"{type(exc).__name__}: {exc}"]
        results.append((name, failures))
    return results
