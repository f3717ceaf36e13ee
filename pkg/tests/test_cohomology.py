from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from relcanon.cohomology import (
    P1BundleSum,
    PEClass,
    UnsupportedBranchError,
    chi_curve,
    chi_scrollbundle,
    chi_term,
    cohomology_p1,
    cohomology_scrollbundle,
    euler_identity_defect,
    recover_degrees,
    sym_power,
)
from relcanon.invariants import (
    GonalityInput,
    SplittingType,
    balanced_splitting,
    beta_rank,
    deg_syzygy_closed,
    derive_geometry,
    scroll_splitting,
)


def scroll(g, k):
    return scroll_splitting(derive_geometry(GonalityInput(g, k)))


def brute_sym_power(twists, a):
    """Enumerate exponent vectors directly instead of multisets of summands."""
    out = []
    for exps in product(range(a + 1), repeat=len(twists)):
        if sum(exps) == a:
            out.append(sum(e * t for e, t in zip(exps, twists)))
    return sorted(out, reverse=True)


def test_p1_examples():
    assert cohomology_p1(P1BundleSum([3, -1, 0]), 0) == 5
    assert cohomology_p1(P1BundleSum([-3]), 1) == 2
    assert cohomology_p1(P1BundleSum([0, 0]), 1) == 0
    assert cohomology_p1(P1BundleSum([5]), 2) == 0


@given(st.lists(st.integers(-30, 30), max_size=20))
def test_p1_euler_relation(twists):
    b = P1BundleSum(twists)
    assert cohomology_p1(b, 0) - cohomology_p1(b, 1) == b.degree + b.rank


def test_sym_power_examples():
    assert sym_power(SplittingType([1, 0]), 2).twists == (2, 1, 0)
    assert sym_power(SplittingType([3, 1, 1]), 0).twists == (0,)
    e = SplittingType([1] * 9 + [0])
    assert sym_power(e, 1).twists == e.twists
    with pytest.raises(ValueError):
        sym_power(e, -1)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.integers(0, 5))
def test_sym_power_matches_brute_force(twists, a):
    s = sym_power(SplittingType(twists), a)
    assert list(s.twists) == brute_sym_power(twists, a)
    assert s.rank == comb(len(twists) - 1 + a, a)


def test_scrollbundle_examples():
    e = scroll(19, 11)
    assert cohomology_scrollbundle(PEClass(1, 0), e, 0) == 19
    for i in range(11):
        assert cohomology_scrollbundle(PEClass(-2, 7), e, i) == 0
    assert cohomology_scrollbundle(PEClass(0, -1), e, 0) == 0
    assert cohomology_scrollbundle(PEClass(0, -1), e, 1) == 0


def test_scrollbundle_rejects_third_branch():
    e = scroll(19, 11)
    cohomology_scrollbundle(PEClass(-10, 0), e, 0)
    with pytest.raises(UnsupportedBranchError):
        cohomology_scrollbundle(PEClass(-11, 0), e, 0)


@pytest.mark.parametrize("k", range(3, 13))
def test_h0_of_hyperplane_is_genus(k):
    for g in range(max(4, k + 1), 3 * k + 1):
        assert cohomology_scrollbundle(PEClass(1, 0), scroll(g, k), 0) == g


def test_chi_term_examples():
    assert chi_term(0, 1, 11, 9) == 154 == comb(11, 9) + 9 * comb(11, 10)
    assert chi_term(1, 1, 11, 9, 56, 44) == 100
    assert chi_term(3, 1, 11, 9, 999, 999) == 0


def test_chi_curve_examples():
    assert chi_curve(2, 19) == 54
    assert chi_curve(1, 19) == 18
    assert chi_curve(3, 19) == 90
    with pytest.raises(ValueError):
        chi_curve(0, 19)


@pytest.mark.parametrize("g,k", [(7, 5), (9, 5), (10, 6), (12, 6), (9, 7), (13, 7), (11, 8)])
def test_chi_term_against_scroll_cohomology(g, k):
    """chi(F_i(n+1)) recomputed from h^i of line bundles on P(E).

    F_0 = O and F_i is a sum of O(-(i+1)H + a R) over the twists a of N_i; any
    splitting of the right degree gives the same Euler characteristic.
    """
    e = scroll(g, k)
    f = g - k + 1
    for n in range(0, k - 2):
        assert chi_term(0, n, k, f) == chi_scrollbundle(PEClass(n + 1, 0), e)
        for i in range(1, k - 2):
            beta, deg = beta_rank(i, k), deg_syzygy_closed(i, g, k)
            direct = sum(chi_scrollbundle(PEClass(n - i, a), e) for a in balanced_splitting(deg, beta).twists)
            assert chi_term(i, n, k, f, deg, beta) == direct


def test_recover_degrees_golden():
    degs = recover_degrees(19, 11)
    assert degs[:2] == [56, 441]
    assert len(degs) == 8


@pytest.mark.parametrize("k", range(4, 12))
def test_recover_degrees_zero_at_g_k_plus_one(k):
    assert recover_degrees(k + 1, k) == [0] * (k - 3)


def test_recover_degrees_small():
    assert recover_degrees(10, 6) == [deg_syzygy_closed(i, 10, 6) for i in (1, 2, 3)] == [9, 24, 18]


def test_recover_degrees_preconditions():
    with pytest.raises(ValueError):
        recover_degrees(5, 3)
    with pytest.raises(ValueError):
        recover_degrees(10, 10)


@settings(max_examples=60)
@given(st.integers(4, 25), st.integers(1, 60))
def test_recursion_equals_closed_form(k, extra):
    g = k + extra
    assert recover_degrees(g, k) == [deg_syzygy_closed(i, g, k) for i in range(1, k - 2)]


def test_euler_defect_examples():
    assert euler_identity_defect(19, 11, 2, [56]) == 0
    # chi(O_C(2)) - (154 - 99) = 54 - 55
    assert euler_identity_defect(19, 11, 2, [55]) == -1
    closed = [deg_syzygy_closed(i, 10, 6) for i in (1, 2, 3)]
    assert euler_identity_defect(10, 6, 3, closed) == 0


def test_euler_defect_errors():
    with pytest.raises(ValueError):
        euler_identity_defect(19, 11, 3, [56])
    with pytest.raises(ValueError):
        euler_identity_defect(19, 11, 1, [])
    with pytest.raises(ValueError):
        euler_identity_defect(19, 11, 10, [0] * 9)


@given(st.integers(5, 15), st.integers(1, 30), st.data())
def test_euler_defect_shift_is_unit(k, extra, data):
    g = k + extra
    nu = data.draw(st.integers(2, k - 2))
    degs = [deg_syzygy_closed(i, g, k) for i in range(1, nu)]
    degs[-1] += 1
    assert abs(euler_identity_defect(g, k, nu, degs)) == 1
