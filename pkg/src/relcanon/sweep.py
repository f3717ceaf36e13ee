"""Lattice sweeps over (k, rho) and their CSV / JSON / SVG renderings."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .classifier import VerdictTag, classify, conic_discriminant4, decompose_quadric_bundle
from .invariants import beta_rank, deg_syzygy_closed

__all__ = [
    "RegionRecord",
    "CSV_HEADER",
    "sweep_region",
    "emit_table",
    "parse_csv",
    "emit_region_svg",
    "conic_branches",
]

CSV_HEADER = "k,rho,g,f,beta1,degN1,l0,l1,l2,conic4,verdict"


@dataclass(frozen=True)
class RegionRecord:
    k: int
    rho: int
    g: int
    f: int
    beta1: int
    degN1: int
    l0: Optional[int]
    l1: Optional[int]
    l2: Optional[int]
    conic4: int
    verdict: VerdictTag

    def check(self) -> None:
        if self.g != 2 * self.k - self.rho - 2:
            raise ValueError(f"inconsistent g in {self}")
        if self.l0 is None:
            return
        assert self.l1 is not None and self.l2 is not None
        if self.l0 + self.l1 + self.l2 != self.beta1 or self.l1 + 2 * self.l2 != self.degN1:
            raise ValueError(f"decomposition does not match rank/degree at (k, rho)=({self.k}, {self.rho})")

    def as_row(self) -> dict:
        row = asdict(self)
        row["verdict"] = self.verdict.value
        return row


def _record(k: int, rho: int) -> RegionRecord:
    g = 2 * k - rho - 2
    verdict = classify(g, k)
    l0 = l1 = l2 = None
    if verdict.is_theorem:
        dec = decompose_quadric_bundle(g, k)
        l0, l1, l2 = dec.l0, dec.l1, dec.l2
    beta1 = beta_rank(1, k)
    deg1 = deg_syzygy_closed(1, g, k)
    return RegionRecord(k, rho, g, g - k + 1, beta1, deg1, l0, l1, l2, conic_discriminant4(k, rho), verdict.tag)


def sweep_region(
    k_min: int, k_max: int, rho_min: int, rho_max: int, *, include_infeasible: bool = False
) -> list[RegionRecord]:
    """Classify every lattice point of the box, ordered by (k, rho).

    Points on or beyond the line rho = k - 3 (g <= k + 1) are skipped unless
    ``include_infeasible`` is set, in which case they come back tagged
    out_of_hypothesis with no decomposition.
    """
    if k_min > k_max or rho_min > rho_max:
        return []
    if k_min < 4:
        raise ValueError(f"sweep needs k_min >= 4, got {k_min}")
    out = []
    for k in range(k_min, k_max + 1):
        for rho in range(rho_min, rho_max + 1):
            if rho >= k - 3 and not include_infeasible:
                continue
            out.append(_record(k, rho))
    return out


def _fmt(v) -> str:
    return "" if v is None else str(v)


def emit_table(records: Iterable[RegionRecord], fmt: str) -> str:
    records = list(records)
    for r in records:
        r.check()
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in records:
            lines.append(",".join(_fmt(v) for v in r.as_row().values()))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([r.as_row() for r in records], indent=2)
    raise ValueError(f"unknown table format {fmt!r}")


def parse_csv(text: str) -> list[RegionRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or ",".join(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    names = [f.name for f in fields(RegionRecord)]
    out = []
    for row in reader:
        vals: dict = {}
        for name, cell in zip(names, row):
            if name == "verdict":
                vals[name] = VerdictTag(cell)
            else:
                vals[name] = int(cell) if cell != "" else None
        out.append(RegionRecord(**vals))
    return out


# --- SVG -------------------------------------------------------------------

FILLS = {
    VerdictTag.UNBALANCED_N1: "#d62728",
    VerdictTag.BALANCED_N1: "#1f77b4",
    VerdictTag.BALANCED_N1_BOUNDARY: "#ff7f0e",
    VerdictTag.CONJECTURAL_BALANCED: "#9467bd",
    VerdictTag.OUT_OF_HYPOTHESIS: "#7f7f7f",
}

_W, _H = 640, 480
_ML, _MR, _MT, _MB = 60, 190, 30, 50


def conic_branches(k: int) -> Optional[tuple[float, float]]:
    """Real roots rho = k - 7/2 -/+ sqrt(2k - 23/4) of the conic at integer k, or None."""
    disc = Fraction(8 * k - 23, 4)
    if disc < 0:
        return None
    root = math.sqrt(disc)
    centre = k - 3.5
    return centre - root, centre + root


def _num(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def emit_region_svg(records: Sequence[RegionRecord], k_max: int) -> str:
    if not records:
        raise ValueError("cannot plot an empty sweep")
    k_lo = 4
    k_hi = max(k_max, k_lo + 1)
    rho_lo = min(0, min(r.rho for r in records))
    rho_hi = max(max(r.rho for r in records), k_hi - 3, rho_lo + 1)

    pw, ph = _W - _ML - _MR, _H - _MT - _MB

    def px(k: float) -> float:
        return _ML + (k - k_lo) / (k_hi - k_lo) * pw

    def py(rho: float) -> float:
        return _MT + ph - (rho - rho_lo) / (rho_hi - rho_lo) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="sans-serif" font-size="11">',
        "<defs>",
        f'<clipPath id="plot"><rect x="{_ML}" y="{_MT}" width="{pw}" height="{ph}"/></clipPath>',
        "</defs>",
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]

    # feasible wedge 0 <= rho < k - 3
    wedge = [(k_lo, 0), (k_hi, 0), (k_hi, k_hi - 3), (k_lo, k_lo - 3)]
    pts = " ".join(f"{_num(px(a))},{_num(py(b))}" for a, b in wedge)
    out.append(f'<polygon class="feasible" points="{pts}" fill="#f2f2f2" clip-path="url(#plot)"/>')

    # axes and ticks
    x0, y0 = px(k_lo), py(rho_lo)
    out.append(f'<line class="axis" x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(px(k_hi))}" y2="{_num(y0)}" stroke="#000"/>')
    out.append(f'<line class="axis" x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x0)}" y2="{_num(py(rho_hi))}" stroke="#000"/>')
    kstep = max(1, (k_hi - k_lo) // 10)
    for k in range(k_lo, k_hi + 1, kstep):
        out.append(f'<text x="{_num(px(k))}" y="{_num(y0 + 15)}" text-anchor="middle">{k}</text>')
    rstep = max(1, (rho_hi - rho_lo) // 10)
    for rho in range(rho_lo, rho_hi + 1, rstep):
        out.append(f'<text x="{_num(x0 - 6)}" y="{_num(py(rho) + 4)}" text-anchor="end">{rho}</text>')
    out.append(f'<text x="{_num(px((k_lo + k_hi) / 2))}" y="{_H - 12}" text-anchor="middle">k</text>')
    out.append(f'<text x="16" y="{_num(py((rho_lo + rho_hi) / 2))}" text-anchor="middle">&#961;</text>')

    # conic, one polyline per branch
    lower, upper = [], []
    for k in range(3, k_hi + 1):
        roots = conic_branches(k)
        if roots is None:
            continue
        lower.append((k, roots[0]))
        upper.append((k, roots[1]))
    for name, branch in (("conic-lower", lower), ("conic-upper", upper)):
        pts = " ".join(f"{_num(px(a))},{_num(py(b))}" for a, b in branch)
        out.append(
            f'<polyline class="{name}" points="{pts}" fill="none" stroke="#2ca02c" stroke-width="1.5" clip-path="url(#plot)"/>'
        )

    # the line rho = k - 3, i.e. g = k + 1
    out.append(
        f'<line class="g-eq-k-plus-1" x1="{_num(px(3))}" y1="{_num(py(0))}" x2="{_num(px(k_hi))}" '
        f'y2="{_num(py(k_hi - 3))}" stroke="#000" stroke-dasharray="4 3" clip-path="url(#plot)"/>'
    )

    for r in sorted(records, key=lambda r: (r.k, r.rho)):
        out.append(
            f'<circle class="{r.verdict.value}" data-k="{r.k}" data-rho="{r.rho}" cx="{_num(px(r.k))}" '
            f'cy="{_num(py(r.rho))}" r="3" fill="{FILLS[r.verdict]}"/>'
        )

    lx, ly = _W - _MR + 15, _MT + 10
    for j, (tag, fill) in enumerate(FILLS.items()):
        y = ly + 18 * j
        out.append(f'<circle cx="{lx}" cy="{y}" r="4" fill="{fill}"/>')
        out.append(f'<text x="{lx + 10}" y="{y + 4}">{tag.value}</text>')
    y = ly + 18 * len(FILLS)
    out.append(f'<line x1="{lx - 5}" y1="{y}" x2="{lx + 5}" y2="{y}" stroke="#2ca02c" stroke-width="1.5"/>')
    out.append(f'<text x="{lx + 10}" y="{y + 4}">conic</text>')
    y += 18
    out.append(f'<line x1="{lx - 5}" y1="{y}" x2="{lx + 5}" y2="{y}" stroke="#000" stroke-dasharray="4 3"/>')
    out.append(f'<text x="{lx + 10}" y="{y + 4}">g = k + 1</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
