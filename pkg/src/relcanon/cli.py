"""Command-line interface.

Exit codes: 0 success, 1 input or runtime error, 2 out-of-hypothesis verdict,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import selftest
from .classifier import (
    ModelViolation,
    VerdictTag,
    classify,
    conjecture_index_range,
    conjecture_spread_bound,
    decompose_quadric_bundle,
    full_profile,
    quadric_count_raw,
)
from .cohomology import recover_degrees
from .invariants import GonalityInput, deg_syzygy_closed, derive_geometry
from .sweep import emit_region_svg, emit_table, sweep_region

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OUT_OF_HYPOTHESIS = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="relcanon", description="Invariants of relative canonical resolutions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="profile, verdict and quadric decomposition for one (g, k)")
    a.add_argument("--g", type=int, help="genus")
    a.add_argument("--k", type=int, required=True, help="degree of the pencil")
    a.add_argument("--rho", type=int, help="Brill-Noether number, alternative to --g")
    a.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("sweep", help="classify the (k, rho) lattice")
    s.add_argument("--k-max", type=int, required=True)
    s.add_argument("--k-min", type=int, default=4)
    s.add_argument("--rho-max", type=int, help="default: k_max")
    s.add_argument("--rho-min", type=int, default=0)
    s.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    s.add_argument("--out", default="-", help="output path, '-' for standard output")

    o = sub.add_parser("oracle-check", help="compare the Euler recursion with the closed degree formula")
    o.add_argument("--k-max", type=int, default=25)
    o.add_argument("--g-span", type=int, default=20)
    o.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)

    t = sub.add_parser("selftest", help="run every invariant suite")
    t.add_argument("--quadratic-l2", action="store_true", help=argparse.SUPPRESS)
    return p


def _resolve_g(args: argparse.Namespace) -> int:
    if args.g is None and args.rho is None:
        raise UsageError("one of --g or --rho is required")
    from_rho = None if args.rho is None else 2 * args.k - args.rho - 2
    if args.g is not None and from_rho is not None and args.g != from_rho:
        raise UsageError(f"--g {args.g} and --rho {args.rho} disagree (rho gives g={from_rho})")
    return args.g if args.g is not None else from_rho


def _analysis(g: int, k: int) -> dict:
    geo = derive_geometry(GonalityInput(g, k))
    verdict = classify(g, k)
    doc: dict = {
        "g": g,
        "k": k,
        "geometry": {
            "rho": geo.rho,
            "d": geo.d,
            "f": geo.f,
            "residual_degree": geo.residual_degree,
            "residual_h0": geo.residual_h0,
            "hypothesis_ok": geo.hypothesis_ok,
        },
        "verdict": verdict.tag.value,
        "reason": verdict.reason,
        "conic4": verdict.conic4,
    }
    if g > k + 1:
        doc["quadric_count_raw"] = quadric_count_raw(g, k)
    if verdict.is_theorem:
        dec = decompose_quadric_bundle(g, k)
        doc["decomposition"] = {"l0": dec.l0, "l1": dec.l1, "l2": dec.l2}
    if g >= k + 1:
        prof = full_profile(g, k)
        doc["scroll"] = {str(t): m for t, m in prof.scroll.counts}
        doc["bundles"] = [
            {
                "index": b.index,
                "rank": b.rank,
                "degree": b.degree,
                "splitting": {str(t): m for t, m in b.predicted_splitting.multiplicities().items()},
                "spread": b.predicted_splitting.spread,
                "provenance": b.provenance,
            }
            for b in prof.bundles
        ]
        doc["conjectural_spread_bounds"] = {
            str(i): conjecture_spread_bound(i, g, k) for i in conjecture_index_range(k)
        }
    return doc


def _text(doc: dict) -> str:
    geo = doc["geometry"]
    lines = [
        f"g = {doc['g']}, k = {doc['k']}",
        f"rho = {geo['rho']}, scroll dimension d = {geo['d']}, scroll degree f = {geo['f']}",
        f"residual system: degree {geo['residual_degree']}, {geo['residual_h0']} sections",
        f"verdict: {doc['verdict']} ({doc['reason']})",
    ]
    if doc["conic4"] is not None:
        lines.append(f"conic4 = {doc['conic4']}")
    if "decomposition" in doc:
        d = doc["decomposition"]
        lines.append(f"bundle of quadrics: l0 = {d['l0']}, l1 = {d['l1']}, l2 = {d['l2']}")
    if "scroll" in doc:
        lines.append("scroll splitting: " + _mult_str(doc["scroll"]))
        lines.append("syzygy bundles:")
        for b in doc["bundles"]:
            lines.append(
                f"  N_{b['index']}: rank {b['rank']}, degree {b['degree']}, "
                f"predicted {_mult_str(b['splitting'])} [{b['provenance']}]"
            )
        for i, bound in doc["conjectural_spread_bounds"].items():
            lines.append(f"  spread(N_{i}) <= {bound} [conjecture]")
    return "\n".join(lines)


def _mult_str(mult: dict) -> str:
    return "{" + ", ".join(f"{t}^{m}" for t, m in mult.items()) + "}"


def run_analyze(args: argparse.Namespace) -> int:
    g = _resolve_g(args)
    try:
        doc = _analysis(g, args.k)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(_text(doc))
    return EXIT_OUT_OF_HYPOTHESIS if doc["verdict"] == VerdictTag.OUT_OF_HYPOTHESIS.value else EXIT_OK


def _write(text: str, out: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run_sweep(args: argparse.Namespace) -> int:
    if args.k_max < 4 or args.k_min < 4:
        print("error: sweep needs k >= 4", file=sys.stderr)
        return EXIT_ERROR
    rho_max = args.k_max if args.rho_max is None else args.rho_max
    if args.format == "svg":
        records = sweep_region(args.k_min, args.k_max, args.rho_min, rho_max, include_infeasible=True)
        if not records:
            print("error: empty sweep", file=sys.stderr)
            return EXIT_ERROR
        text = emit_region_svg(records, args.k_max)
    else:
        text = emit_table(sweep_region(args.k_min, args.k_max, args.rho_min, rho_max), args.format)
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def run_oracle_check(args: argparse.Namespace) -> int:
    if args.k_max < 4:
        print("error: oracle-check needs --k-max >= 4", file=sys.stderr)
        return EXIT_ERROR
    passed = failed = 0
    for k in range(4, args.k_max + 1):
        for g in range(k + 1, k + args.g_span + 1):
            closed = [deg_syzygy_closed(i, g, k) for i in range(1, k - 2)]
            if args.perturb and (g, k) == (k + 1, 4):
                closed[0] += 1
            if recover_degrees(g, k) == closed:
                passed += 1
            else:
                failed += 1
                print(f"FAIL g={g} k={k}")
    print(f"oracle-check: {passed} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_ERROR


def run_selftest(args: argparse.Namespace) -> int:
    ok = True
    for name, failures in selftest.run(quadratic_l2=args.quadratic_l2):
        print(f"{'PASS' if not failures else 'FAIL'} {name}")
        for msg in failures[:5]:
            print(f"  {msg}")
        ok = ok and not failures
    return EXIT_OK if ok else EXIT_ERROR


COMMANDS = {
    "analyze": run_analyze,
    "sweep": run_sweep,
    "oracle-check": run_oracle_check,
    "selftest": run_selftest,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
