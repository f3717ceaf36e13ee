import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from relcanon.classifier import VerdictTag
from relcanon.sweep import (
    CSV_HEADER,
    RegionRecord,
    conic_branches,
    emit_region_svg,
    emit_table,
    parse_csv,
    sweep_region,
)

FIXTURES = Path(__file__).parent / "fixtures"


def test_single_golden_record():
    (r,) = sweep_region(11, 11, 1, 1)
    assert (r.k, r.rho, r.g, r.f, r.beta1, r.degN1) == (11, 1, 19, 9, 44, 56)
    assert (r.l0, r.l1, r.l2, r.conic4) == (1, 30, 13, 104)
    assert r.verdict is VerdictTag.UNBALANCED_N1


def test_boundary_record():
    (r,) = sweep_region(6, 6, 0, 0)
    assert r.conic4 == 0 and r.verdict is VerdictTag.BALANCED_N1_BOUNDARY


def test_inverted_ranges_are_empty():
    assert sweep_region(5, 4, 0, 0) == []
    assert sweep_region(5, 6, 2, 1) == []


def test_sweep_rejects_small_k():
    with pytest.raises(ValueError):
        sweep_region(3, 6, 0, 2)


def test_sweep_order_and_feasibility():
    recs = sweep_region(4, 12, -2, 12)
    keys = [(r.k, r.rho) for r in recs]
    assert keys == sorted(keys)
    assert all(r.rho < r.k - 3 for r in recs)
    assert len(recs) == sum(len(range(-2, min(12, k - 4) + 1)) for k in range(4, 13))


def test_sweep_infeasible_points_tagged():
    recs = {(r.k, r.rho): r for r in sweep_region(4, 10, 0, 10, include_infeasible=True)}
    r = recs[(7, 4)]
    assert r.verdict is VerdictTag.OUT_OF_HYPOTHESIS and r.l0 is None
    assert recs[(7, 3)].verdict is not VerdictTag.OUT_OF_HYPOTHESIS


def test_negative_rho_records_are_conjectural():
    (r,) = sweep_region(7, 7, -5, -5)
    assert r.g == 17 and r.verdict is VerdictTag.CONJECTURAL_BALANCED and r.l0 is None


def test_row_count_formula():
    rho_max = 10
    recs = sweep_region(4, 20, 0, rho_max)
    assert len(recs) == sum(min(rho_max + 1, max(k - 3, 0)) for k in range(4, 21))


def test_csv_golden_row():
    text = emit_table(sweep_region(11, 11, 1, 1), "csv")
    assert text == CSV_HEADER + "\n11,1,19,9,44,56,1,30,13,104,unbalanced_N1\n"


def test_empty_tables():
    assert emit_table([], "csv") == CSV_HEADER + "\n"
    assert emit_table([], "json") == "[]"


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_table([], "xml")


def test_json_fields_match_csv_header():
    doc = json.loads(emit_table(sweep_region(4, 9, 0, 9), "json"))
    assert all(list(row) == CSV_HEADER.split(",") for row in doc)


@pytest.mark.parametrize("ext,fmt", [("csv", "csv"), ("json", "json")])
def test_table_fixtures(ext, fmt):
    expected = (FIXTURES / f"sweep_k11_rho1.{ext}").read_bytes()
    assert emit_table(sweep_region(11, 11, 1, 1), fmt).encode() == expected


def test_svg_fixture():
    expected = (FIXTURES / "sweep_k11_rho1.svg").read_bytes()
    assert emit_region_svg(sweep_region(11, 11, 1, 1), 11).encode() == expected


def test_emit_rechecks_records():
    bad = RegionRecord(11, 1, 19, 9, 44, 56, 2, 30, 13, 104, VerdictTag.UNBALANCED_N1)
    with pytest.raises(ValueError):
        emit_table([bad], "csv")


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 25), st.integers(0, 10), st.integers(-4, 4), st.integers(0, 25), st.booleans())
def test_csv_round_trip(k_min, k_span, rho_min, rho_span, infeasible):
    recs = sweep_region(k_min, k_min + k_span, rho_min, rho_min + rho_span, include_infeasible=infeasible)
    assert parse_csv(emit_table(recs, "csv")) == recs


def test_parse_csv_rejects_bad_header():
    with pytest.raises(ValueError):
        parse_csv("a,b\n1,2\n")


def test_svg_contents():
    recs = sweep_region(4, 12, 0, 12, include_infeasible=True)
    svg = emit_region_svg(recs, 12)
    assert svg.startswith("<?xml") and "<svg" in svg and svg.rstrip().endswith("</svg>")
    assert '<circle class="unbalanced_N1" data-k="11" data-rho="1"' in svg
    assert '<circle class="balanced_N1_boundary" data-k="6" data-rho="0"' in svg
    assert '<circle class="out_of_hypothesis" data-k="7" data-rho="4"' in svg
    assert 'class="conic-lower"' in svg and 'class="conic-upper"' in svg
    assert 'class="g-eq-k-plus-1"' in svg
    for tag in VerdictTag:
        assert f">{tag.value}</text>" in svg
    assert svg == emit_region_svg(list(reversed(recs)), 12)


def test_svg_rejects_empty():
    with pytest.raises(ValueError):
        emit_region_svg([], 10)


def test_conic_branches():
    assert conic_branches(2) is None
    lo, hi = conic_branches(6)
    assert lo == pytest.approx(0.0) and hi == pytest.approx(5.0)
    lo, hi = conic_branches(11)
    assert 1 < lo < hi  # rho = 1 lies below the lower branch: inside the region


def test_svg_is_well_formed_xml():
    import xml.etree.ElementTree as ET

    svg = emit_region_svg(sweep_region(4, 30, -4, 30, include_infeasible=True), 30)
    root = ET.fromstring(svg.encode())
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    circles = root.findall(".//{http://www.w3.org/2000/svg}circle[@data-k]")
    assert len(circles) == 27 * 35
