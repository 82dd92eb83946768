"""Command-line front end over the JSON wire formats.

Exit codes: 0 success (or true answer), 1 well-formed false answer,
2 malformed input or internal error (one-line JSON diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, jsonio
from .core import are_isomorphic
from .derived import (
    alexander_dual,
    barycentric_subdivision,
    complement_complex,
    facet_ideal_generators,
    iterated_subdivision,
    stanley_reisner_generators,
)
from .errors import BarysubError
from .graphs import comparability_graph
from .reconstruct import (
    STATUS_OK,
    reconstruct_from_comparability_graph,
    reconstruct_from_subdivision,
)
from .verify import VerificationReport, verify_equivalences, verify_subdivision_rigidity


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _read_complex(path: str):
    return jsonio.complex_from_obj(_read_json(path))


def _read_graph(path: str):
    return jsonio.graph_from_obj(_read_json(path))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barysub",
        description="Combinatorial operators on simplicial complexes and "
        "reconstruction from barycentric subdivisions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, graph_input: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="path to %s JSON" % ("graph" if graph_input else "complex"))
        p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        return p

    p = add("subdivide", "barycentric subdivision (complex JSON out)")
    p.add_argument("-k", type=int, default=1, help="number of subdivision steps (default 1)")
    p.add_argument("--labels", default=None, help="also write the vertex/face pairing (k=1 only)")

    add("dual", "Alexander dual (complex JSON out)")
    add("complement", "facet-complement complex (complex JSON out)")
    add("comp-graph", "comparability graph of the face poset (graph JSON out)")

    p = add("skeleton", "i-skeleton (complex JSON out)")
    p.add_argument("-i", type=int, required=True, help="skeleton dimension")

    add("nonfaces", "minimal nonfaces (generator-set JSON out)")
    add("sr-gens", "Stanley-Reisner ideal generator supports")
    add("facet-gens", "facet ideal generator supports")
    add("euler", "Euler characteristic (bare integer out)")

    p = sub.add_parser("iso", help="isomorphism test with witness; exit code is the answer")
    p.add_argument("a", help="path to first complex JSON")
    p.add_argument("b", help="path to second complex JSON")
    p.add_argument("-o", "--output", default=None)

    p = add("reconstruct", "rebuild a complex from a comparability graph", graph_input=True)
    p.add_argument("--report", action="store_true", help="emit the full report JSON")

    p = add("reconstruct-sub", "rebuild a complex from its barycentric subdivision")
    p.add_argument("--report", action="store_true", help="emit the full report JSON")

    add("check-comparability", "is the graph a face-poset comparability graph", graph_input=True)

    p = sub.add_parser("verify", help="exhaustive theorem verification over small universes")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--theorem", choices=["2.2", "2.3"], default=None,
                   help="2.2 = rigidity, 2.3 = equivalences (default: both)")
    p.add_argument("-o", "--output", default=None)

    return parser


def _emit_reconstruction(rep, want_report: bool, output: str | None) -> int:
    if want_report or rep.status != STATUS_OK:
        _write(jsonio.dumps(jsonio.reconstruction_report_to_obj(rep)), output)
        return 0 if rep.status == STATUS_OK else 1
    _write(jsonio.dumps(jsonio.complex_to_obj(rep.complex)), output)
    return 0


def _merge_reports(parts: list[VerificationReport]) -> VerificationReport:
    merged = VerificationReport(
        universe_size=sum(p.universe_size for p in parts),
        pair_checks=sum(p.pair_checks for p in parts),
    )
    for p in parts:
        merged.failures.extend(p.failures)
        merged.notes.extend(p.notes)
    return merged


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "subdivide":
        cx = _read_complex(args.input)
        if args.k == 1:
            sub, labeling = barycentric_subdivision(cx)
            if args.labels:
                _write(jsonio.dumps(jsonio.labeling_to_obj(labeling)), args.labels)
        else:
            if args.labels:
                raise ValueError("--labels pairs with a single subdivision step")
            sub = iterated_subdivision(cx, args.k)
        _write(jsonio.dumps(jsonio.complex_to_obj(sub)), args.output)
        return 0
    if cmd == "dual":
        _write(jsonio.dumps(jsonio.complex_to_obj(alexander_dual(_read_complex(args.input)))), args.output)
        return 0
    if cmd == "complement":
        _write(jsonio.dumps(jsonio.complex_to_obj(complement_complex(_read_complex(args.input)))), args.output)
        return 0
    if cmd == "comp-graph":
        _write(jsonio.dumps(jsonio.graph_to_obj(comparability_graph(_read_complex(args.input)))), args.output)
        return 0
    if cmd == "skeleton":
        _write(jsonio.dumps(jsonio.complex_to_obj(_read_complex(args.input).skeleton(args.i))), args.output)
        return 0
    if cmd == "nonfaces":
        _write(jsonio.dumps(jsonio.generators_to_obj(_read_complex(args.input).minimal_nonfaces())), args.output)
        return 0
    if cmd == "sr-gens":
        _write(jsonio.dumps(jsonio.generators_to_obj(stanley_reisner_generators(_read_complex(args.input)))), args.output)
        return 0
    if cmd == "facet-gens":
        _write(jsonio.dumps(jsonio.generators_to_obj(facet_ideal_generators(_read_complex(args.input)))), args.output)
        return 0
    if cmd == "euler":
        _write(str(_read_complex(args.input).euler_characteristic()), args.output)
        return 0
    if cmd == "iso":
        witness = are_isomorphic(_read_complex(args.a), _read_complex(args.b))
        obj = {
            "isomorphic": witness is not None,
            "map": None if witness is None else list(witness.mapping),
        }
        _write(jsonio.dumps(obj), args.output)
        return 0 if witness is not None else 1
    if cmd == "reconstruct":
        rep = reconstruct_from_comparability_graph(_read_graph(args.input))
        return _emit_reconstruction(rep, args.report, args.output)
    if cmd == "reconstruct-sub":
        rep = reconstruct_from_subdivision(_read_complex(args.input))
        return _emit_reconstruction(rep, args.report, args.output)
    if cmd == "check-comparability":
        rep = reconstruct_from_comparability_graph(_read_graph(args.input))
        obj = {"is_comparability_graph": rep.status == STATUS_OK, "status": rep.status}
        _write(jsonio.dumps(obj), args.output)
        return 0 if rep.status == STATUS_OK else 1
    if cmd == "verify":
        parts = []
        if args.theorem in (None, "2.2"):
            parts.append(verify_subdivision_rigidity(args.max_vertices))
        if args.theorem in (None, "2.3"):
            parts.append(verify_equivalences(args.max_vertices))
        merged = parts[0] if len(parts) == 1 else _merge_reports(parts)
        _write(jsonio.dumps(jsonio.verification_report_to_obj(merged)), args.output)
        return 0 if not merged.failures else 1
    raise ValueError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, 0 on --help/--version; pass through
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (BarysubError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return 2


run = main
