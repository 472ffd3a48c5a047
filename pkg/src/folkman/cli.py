"""Command-line surface: decide arrowing, compute bounds, print the
closed-form tables, build and verify witness certificates.

Every command supports --json with a schema-stable envelope
{command, result, seconds, nodes}.  Exit codes: 0 decided, 2 undecided
(budget exhausted), 1 usage or data error.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .arrowing import (ARROWS, DEFAULT_BUDGET, FREE, UNDECIDED, color_classes,
                       find_free_coloring)
from .bounds import BoundRecord, Rule, best_bounds, closed_form_upper_3p, closed_form_upper_22p, default_table
from .formats import GraphFormatError, read_graph_file
from .signatures import Signature, normalize
from .witnesses import (UNVERIFIED, base_witness, format_certificate,
                        load_external_witness)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2

_FORMAT_NAMES = {"g6": "graph6", "graph6": "graph6", "el": "edge-list", "edge-list": "edge-list"}


def _parse_sig(text: str) -> Signature:
    try:
        raw = [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise ValueError(f"signature must be comma-separated integers, got {text!r}")
    sig = normalize(raw)
    if tuple(raw) != sig.parts:
        print(f"note: signature {text} normalized to {sig}", file=sys.stderr)
    return sig


def _parse_budget(value: int) -> int | None:
    if value < 0:
        raise ValueError("budget must be >= 0 (0 means unlimited)")
    return None if value == 0 else value


def _parse_p_range(text: str) -> range:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 4:
        raise ValueError("closed-form tables start at p = 4")
    if hi < lo:
        raise ValueError(f"empty p range {text!r}")
    return range(lo, hi + 1)


def _load_graph(args) -> "Graph":
    fmt = _FORMAT_NAMES[args.format] if args.format else None
    return read_graph_file(args.graph, fmt)


def _emit(args, command: str, result: dict, text_lines: list[str],
          seconds: float, nodes: int | None) -> None:
    if args.json:
        record = {"command": command, "result": result,
                  "seconds": round(seconds, 6), "nodes": nodes}
        print(json.dumps(record, indent=2))
    else:
        for line in text_lines:
            print(line)


def _provenance_json(rules: Sequence[Rule]) -> list[dict]:
    return [{"rule": r.name, "detail": r.detail, "children": _provenance_json(r.children)}
            for r in rules]


def _provenance_text(rules: Sequence[Rule], indent: str = "  ") -> list[str]:
    lines = []
    for r in rules:
        lines.append(f"{indent}{r.name}: {r.detail}")
        lines.extend(_provenance_text(r.children, indent + "  "))
    return lines


def _record_json(rec: BoundRecord) -> dict:
    return {
        "signature": list(rec.signature.parts),
        "q": rec.q,
        "lower": rec.lower,
        "upper": rec.upper,
        "exact": rec.exact,
        "note": rec.note,
        "provenance": _provenance_json(rec.provenance),
    }


def _cmd_arrow(args) -> int:
    graph = _load_graph(args)
    sig = _parse_sig(args.sig)
    started = time.perf_counter()
    result = find_free_coloring(graph, sig, budget=_parse_budget(args.budget), jobs=args.jobs)
    seconds = time.perf_counter() - started
    payload: dict = {"verdict": result.verdict,
                     "arrows": None if result.verdict == UNDECIDED else result.verdict == ARROWS,
                     "signature": list(sig.parts)}
    lines = []
    if result.verdict == ARROWS:
        lines.append("arrows: true")
    elif result.verdict == FREE:
        lines.append("arrows: false")
        classes = color_classes(result.coloring, max(sig.r, 1))
        payload["free_coloring_classes"] = classes
        for c, members in enumerate(classes, start=1):
            lines.append(f"class {c}: " + " ".join(str(v) for v in members))
    else:
        lines.append(f"undecided: budget exhausted after {result.nodes} nodes")
    _emit(args, "arrow", payload, lines, seconds, result.nodes)
    return EXIT_UNDECIDED if result.verdict == UNDECIDED else EXIT_OK


def _cmd_bound(args) -> int:
    sig = _parse_sig(args.sig)
    table = default_table(extra_path=args.table)
    started = time.perf_counter()
    rec = best_bounds(sig, args.q, table)
    seconds = time.perf_counter() - started
    lines = []
    label = f"F({sig};{args.q})"
    if rec.exact:
        lines.append(f"{label} = {rec.lower} (exact)")
    elif rec.lower is None and rec.upper is None:
        lines.append(f"{label}: no bounds ({rec.note})")
    else:
        lines.append(f"{label}: lower {rec.lower if rec.lower is not None else '-'}"
                     f", upper {rec.upper if rec.upper is not None else '-'}")
    if rec.provenance:
        lines.append("provenance:")
        lines.extend(_provenance_text(rec.provenance))
    _emit(args, "bound", _record_json(rec), lines, seconds, None)
    return EXIT_OK


def _cmd_table(args) -> int:
    ps = _parse_p_range(args.p)
    started = time.perf_counter()
    rows = []
    for p in ps:
        row: dict = {"p": p}
        if args.kind in ("cor1", "both"):
            row["cor1"] = closed_form_upper_3p(p)
        if args.kind in ("cor2", "both"):
            row["cor2"] = closed_form_upper_22p(p)
        if args.kind == "both":
            row["cor2_le_cor1"] = row["cor2"] <= row["cor1"]
        rows.append(row)
    seconds = time.perf_counter() - started
    header = {"cor1": "p cor1", "cor2": "p cor2", "both": "p cor1 cor2 cor2<=cor1"}[args.kind]
    lines = [header]
    for row in rows:
        cells = [str(row["p"])]
        if "cor1" in row:
            cells.append(str(row["cor1"]))
        if "cor2" in row:
            cells.append(str(row["cor2"]))
        if "cor2_le_cor1" in row:
            cells.append("true" if row["cor2_le_cor1"] else "false")
        lines.append(" ".join(cells))
    _emit(args, "table", {"kind": args.kind, "rows": rows}, lines, seconds, None)
    return EXIT_OK


def _certificate_payload(cert) -> dict:
    from .formats import serialize_graph6

    payload = {
        "status": cert.status,
        "signature": list(cert.signature.parts),
        "q": cert.q,
        "vertices": cert.vertices,
        "graph6": serialize_graph6(cert.graph),
        "construction": cert.construction,
    }
    if cert.free_coloring is not None:
        payload["free_coloring"] = list(cert.free_coloring)
    if cert.clique is not None:
        payload["clique"] = list(cert.clique)
    return payload


def _cmd_witness(args) -> int:
    sig = _parse_sig(args.sig)
    started = time.perf_counter()
    cert = base_witness(sig, args.q, budget=_parse_budget(args.verify_budget), jobs=args.jobs)
    seconds = time.perf_counter() - started
    record = format_certificate(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(record)
        print(f"note: certificate written to {args.out}", file=sys.stderr)
    lines = record.rstrip("\n").splitlines()
    _emit(args, "witness", _certificate_payload(cert), lines, seconds, cert.nodes)
    return EXIT_UNDECIDED if cert.status == UNVERIFIED else EXIT_OK


def _cmd_verify(args) -> int:
    sig = _parse_sig(args.sig)
    fmt = _FORMAT_NAMES[args.format] if args.format else None
    started = time.perf_counter()
    cert = load_external_witness(args.graph, sig, args.q,
                                 budget=_parse_budget(args.budget), fmt=fmt, jobs=args.jobs)
    seconds = time.perf_counter() - started
    lines = format_certificate(cert).rstrip("\n").splitlines()
    _emit(args, "verify", _certificate_payload(cert), lines, seconds, cert.nodes)
    return EXIT_UNDECIDED if cert.status == UNVERIFIED else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folkman",
        description="Vertex Folkman numbers: arrowing decisions, bounds, witness certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON record on stdout")

    p_arrow = sub.add_parser("arrow", help="decide whether a graph arrows a signature")
    p_arrow.add_argument("--graph", required=True, help="graph file (.g6 or .el), or - for stdin")
    p_arrow.add_argument("--sig", required=True, help="comma-separated signature, e.g. 2,2")
    p_arrow.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="search-node budget (0 = unlimited; default 1e8)")
    p_arrow.add_argument("--jobs", type=int, default=1, help="worker processes for the search")
    p_arrow.add_argument("--format", choices=sorted(_FORMAT_NAMES),
                         help="override the format inferred from the extension")
    add_common(p_arrow)
    p_arrow.set_defaults(handler=_cmd_arrow)

    p_bound = sub.add_parser("bound", help="best known bounds for F(sig; q)")
    p_bound.add_argument("--sig", required=True)
    p_bound.add_argument("--q", type=int, required=True)
    p_bound.add_argument("--table", help="extra known-values file (also FOLKMAN_TABLE env var)")
    add_common(p_bound)
    p_bound.set_defaults(handler=_cmd_bound)

    p_table = sub.add_parser("table", help="closed-form upper-bound tables")
    p_table.add_argument("--kind", choices=["cor1", "cor2", "both"], required=True)
    p_table.add_argument("--p", required=True, help="p value or range, e.g. 8 or 4..12")
    add_common(p_table)
    p_table.set_defaults(handler=_cmd_table)

    p_witness = sub.add_parser("witness", help="construct and check a stock witness")
    p_witness.add_argument("--sig", required=True)
    p_witness.add_argument("--q", type=int, required=True)
    p_witness.add_argument("--out", help="write the certificate record to this file")
    p_witness.add_argument("--verify-budget", type=int, default=DEFAULT_BUDGET,
                           help="search-node budget for verification (0 = unlimited)")
    p_witness.add_argument("--jobs", type=int, default=1)
    add_common(p_witness)
    p_witness.set_defaults(handler=_cmd_witness)

    p_verify = sub.add_parser("verify", help="check an externally supplied witness graph")
    p_verify.add_argument("--graph", required=True, help="graph file (.g6 or .el), or - for stdin")
    p_verify.add_argument("--sig", required=True)
    p_verify.add_argument("--q", type=int, required=True)
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=sorted(_FORMAT_NAMES))
    add_common(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
