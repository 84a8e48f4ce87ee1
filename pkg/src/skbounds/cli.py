"""Command-line front end.

Reads a line-oriented hypergraph document, runs the requested analysis, and
prints a human-readable or JSON report.

Document format::

    # comment
    m = 4
    edge 1 2 : 2
    edge 3 4 : 1.5

Duplicate edge lines merge by summing weights.  Exit codes: 0 success,
1 invariant violation (under --check), 2 malformed or unsuitable input,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .bounds import (
    analyze,
    ci_graphical,
    graphical_lower_bound,
    graphical_upper_bound,
    r_co_direct,
    upper_bound_theorem1,
    verify_gamma_membership,
)
from .errors import (
    CapExceededError,
    InputFormatError,
    InternalInvariantError,
    RowGenerationLimitError,
    SkboundsError,
)
from .hypergraph import MAX_VERTICES, WeightedHypergraph, format_subset, mask_of
from .partitions import Partition, mmi
from .rational import format_rational, parse_rational

_HEADER_RE = re.compile(r"^m\s*=\s*(\d+)$")
_EDGE_RE = re.compile(r"^edge((?:\s+\d+)+)\s*:\s*(\S+)$")


def parse_document(text: str) -> WeightedHypergraph:
    """Parse a hypergraph document; raises InputFormatError with line numbers."""
    m = None
    weights: dict[int, Fraction] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m is None:
            match = _HEADER_RE.match(line)
            if not match:
                raise InputFormatError("expected header 'm = <count>'", line_no)
            m = int(match.group(1))
            if m < 2:
                raise InputFormatError("need at least 2 terminals", line_no)
            if m > MAX_VERTICES:
                raise CapExceededError(
                    f"line {line_no}: m = {m} exceeds the supported maximum of {MAX_VERTICES}"
                )
            continue
        match = _EDGE_RE.match(line)
        if not match:
            raise InputFormatError(f"unrecognized line: {line!r}", line_no)
        vertices = [int(tok) for tok in match.group(1).split()]
        if len(set(vertices)) != len(vertices):
            raise InputFormatError("repeated vertex in edge", line_no)
        for v in vertices:
            if not 1 <= v <= m:
                raise InputFormatError(f"vertex {v} outside 1..{m}", line_no)
        try:
            weight = parse_rational(match.group(2))
        except ValueError as exc:
            raise InputFormatError(str(exc), line_no) from exc
        if weight <= 0:
            raise InputFormatError(f"weight must be positive, got {weight}", line_no)
        mask = mask_of(vertices)
        weights[mask] = weights.get(mask, Fraction(0)) + weight
    if m is None:
        raise InputFormatError("empty document: missing 'm = <count>' header")
    if not weights:
        raise InputFormatError("document lists no edges")
    return WeightedHypergraph(m, weights)


def _render_partition(partition: Partition) -> str:
    return str(partition)


def _partition_cells_json(partition: Partition) -> list[list[int]]:
    return [list(cell) for cell in partition.vertex_cells()]


def _x_star_lines(hg: WeightedHypergraph, packing) -> list[str]:
    return [
        f"x*({format_subset(e)}) = {format_rational(packing.entries[e])}"
        for e in hg.edges
    ]


def _x_star_json(hg: WeightedHypergraph, packing) -> dict[str, str]:
    return {format_subset(e): format_rational(packing.entries[e]) for e in hg.edges}


def _is_graph(hg: WeightedHypergraph) -> bool:
    return all(mask.bit_count() == 2 for mask in hg.weights)


def _cmd_analyze(hg, method, as_json):
    report = analyze(hg, method=method)
    if as_json:
        doc = {
            "m": hg.m,
            "entropy_total": format_rational(report.entropy_total),
            "mmi": {
                "value": format_rational(report.mmi.value),
                "fundamental": _partition_cells_json(report.mmi.fundamental),
                "minimizer_count": len(report.mmi.all_minimizers),
            },
            "r_co": format_rational(report.r_co),
            "ub_theorem1": format_rational(report.ub_theorem1),
            "x_star": _x_star_json(hg, report.x_star),
            "graphical": None
            if report.graphical is None
            else {
                "ub_theorem2": format_rational(report.graphical.ub_theorem2),
                "lower_bound": format_rational(report.graphical.lower_bound),
                "ci": format_rational(report.graphical.ci),
                "cross_edge_sum": format_rational(report.graphical.cross_edge_sum),
            },
        }
        return [json.dumps(doc, indent=2)]
    lines = [
        f"m = {hg.m}",
        f"H(X_M) = {format_rational(report.entropy_total)}",
        f"I(X_M) = {format_rational(report.mmi.value)}",
        f"P* = {_render_partition(report.mmi.fundamental)}",
        f"minimizers = {len(report.mmi.all_minimizers)}",
        f"R_CO = {format_rational(report.r_co)}",
        f"UB(Thm 1) = {format_rational(report.ub_theorem1)}",
    ]
    lines.extend(_x_star_lines(hg, report.x_star))
    if report.graphical is not None:
        lines.extend(
            [
                f"UB(Thm 2) = {format_rational(report.graphical.ub_theorem2)}",
                f"LB(Thm 3) = {format_rational(report.graphical.lower_bound)}",
                f"CI = {format_rational(report.graphical.ci)}",
                f"cross(P*) = {format_rational(report.graphical.cross_edge_sum)}",
            ]
        )
    else:
        lines.append("graphical bounds: n/a (not a graph)")
    return lines


def _cmd_mmi(hg, method, as_json):
    result = mmi(hg)
    if as_json:
        doc = {
            "m": hg.m,
            "mmi": {
                "value": format_rational(result.value),
                "fundamental": _partition_cells_json(result.fundamental),
                "minimizer_count": len(result.all_minimizers),
            },
        }
        return [json.dumps(doc, indent=2)]
    return [
        f"I(X_M) = {format_rational(result.value)}",
        f"P* = {_render_partition(result.fundamental)}",
        f"minimizers = {len(result.all_minimizers)}",
    ]


def _cmd_rco(hg, method, as_json):
    value, _rates = r_co_direct(hg, method=method)
    if as_json:
        return [json.dumps({"m": hg.m, "r_co": format_rational(value)}, indent=2)]
    return [f"R_CO = {format_rational(value)}"]


def _cmd_ub(hg, method, as_json):
    bound, packing = upper_bound_theorem1(hg, method=method)
    if as_json:
        doc = {
            "m": hg.m,
            "ub_theorem1": format_rational(bound),
            "x_star": _x_star_json(hg, packing),
        }
        return [json.dumps(doc, indent=2)]
    return [f"UB(Thm 1) = {format_rational(bound)}"] + _x_star_lines(hg, packing)


def _cmd_lb(hg, method, as_json):
    if not _is_graph(hg):
        raise InputFormatError("lower bound needs a graphical source (all edges of size 2)")
    bound = graphical_lower_bound(hg)
    if as_json:
        return [json.dumps({"m": hg.m, "lower_bound": format_rational(bound)}, indent=2)]
    return [f"LB(Thm 3) = {format_rational(bound)}"]


_COMMANDS = {
    "analyze": _cmd_analyze,
    "mmi": _cmd_mmi,
    "rco": _cmd_rco,
    "ub": _cmd_ub,
    "lb": _cmd_lb,
}


def run_checks(hg: WeightedHypergraph) -> list[tuple[str, bool, str]]:
    """Invariant suite behind --check; each entry is (label, ok, detail)."""
    checks: list[tuple[str, bool, str]] = []
    entropy_total = hg.total_entropy
    mres = mmi(hg)
    rco_full, _ = r_co_direct(hg, method="full")
    rco_rg, _ = r_co_direct(hg, method="rowgen")
    ub_full, x_star = upper_bound_theorem1(hg, mmi_result=mres, method="full")
    ub_rg, _ = upper_bound_theorem1(hg, mmi_result=mres, method="rowgen")

    identity = entropy_total - mres.value
    checks.append(
        ("R_CO identity (H - I)", rco_full == identity, f"{rco_full} vs {identity}")
    )
    checks.append(
        ("row generation agreement (R_CO)", rco_full == rco_rg, f"{rco_full} vs {rco_rg}")
    )
    checks.append(
        ("row generation agreement (packing LP)", ub_full == ub_rg, f"{ub_full} vs {ub_rg}")
    )
    checks.append(
        ("dominance UB <= R_CO", ub_full <= rco_full, f"{ub_full} vs {rco_full}")
    )
    checks.append(
        (
            "x* preserves capacity (Gamma membership)",
            verify_gamma_membership(hg, x_star),
            "capacity changed under x*",
        )
    )
    if _is_graph(hg):
        ub2 = graphical_upper_bound(hg, mmi_result=mres)
        lb = graphical_lower_bound(hg, mmi_result=mres)
        ci = ci_graphical(hg, mmi_result=mres)
        checks.append(
            ("graph agreement UB = (m-2) I", ub_full == ub2, f"{ub_full} vs {ub2}")
        )
        checks.append(("sandwich LB <= UB", lb <= ub_full, f"{lb} vs {ub_full}"))
        checks.append(("LB = CI - I", lb == ci - mres.value, f"{lb} vs {ci - mres.value}"))
        reduced = hg.restrict(x_star.entries)
        checks.append(
            (
                "reduced source is Type S",
                mmi(reduced).fundamental.size == hg.m,
                "fundamental partition of reduced source is coarser than singletons",
            )
        )
    return checks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skbounds",
        description="Exact secret-key capacity and communication bounds for hypergraphical sources.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    help_by_command = {
        "analyze": "full report: entropy, capacity, omniscience rate, packing bound, graph bounds",
        "mmi": "capacity (shared-information minimum) and fundamental partition",
        "rco": "minimum communication rate for omniscience",
        "ub": "packing-LP upper bound with an optimal packing",
        "lb": "graphical lower bound on the communication for capacity",
    }
    for name, help_text in help_by_command.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("path", help="hypergraph document, or - for stdin")
        cmd.add_argument("--json", action="store_true", help="emit a machine-readable report")
        cmd.add_argument(
            "--check",
            action="store_true",
            help="additionally run the invariant suite; exit 1 on any violation",
        )
        rows = cmd.add_mutually_exclusive_group()
        rows.add_argument(
            "--full-rows",
            action="store_const",
            const="full",
            dest="method",
            help="materialize every subset constraint",
        )
        rows.add_argument(
            "--row-gen",
            action="store_const",
            const="rowgen",
            dest="method",
            help="generate subset constraints with the separation oracle",
        )
        cmd.set_defaults(method="auto")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            with open(args.path, "r", encoding="utf-8") as handle:
                text = handle.read()
        hg = parse_document(text)
        lines = _COMMANDS[args.command](hg, args.method, args.json)
        for line in lines:
            print(line)
        if args.check:
            failures = 0
            for label, ok, detail in run_checks(hg):
                if ok:
                    print(f"check {label}: ok", file=sys.stderr)
                else:
                    failures += 1
                    print(f"check {label}: FAIL ({detail})", file=sys.stderr)
            if failures:
                return 1
    except OSError as exc:
        print(f"skbounds: {exc}", file=sys.stderr)
        return 2
    except InputFormatError as exc:
        print(f"skbounds: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"skbounds: {exc}", file=sys.stderr)
        return 3
    except (InternalInvariantError, RowGenerationLimitError) as exc:
        print(f"skbounds: internal invariant violated: {exc}", file=sys.stderr)
        return 1
    except SkboundsError as exc:
        print(f"skbounds: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
