"""JSON wire formats. Every writer emits canonical, fully sorted output."""

from __future__ import annotations

import json

from .core import SimplicialComplex, VertexSet, complex_from_facets, void_complex
from .derived import FaceLabeling
from .graphs import LabeledGraph
from .reconstruct import ReconstructionReport
from .verify import VerificationReport


def complex_to_obj(cx: SimplicialComplex) -> dict:
    obj = {
        "ground_set": cx.ground_size,
        "facets": [list(f.elements) for f in cx.facets],
    }
    if cx.void:
        obj["void"] = True
    return obj


def complex_from_obj(obj) -> SimplicialComplex:
    if not isinstance(obj, dict):
        raise ValueError("complex JSON must be an object")
    try:
        n = int(obj["ground_set"])
        facets = obj["facets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"complex JSON missing or malformed field: {exc}") from exc
    if not isinstance(facets, list):
        raise ValueError("facets must be a list of vertex lists")
    if obj.get("void"):
        if facets:
            raise ValueError("void complex cannot list facets")
        return void_complex(n)
    return complex_from_facets(n, [_vertex_list(f) for f in facets])


def _vertex_list(entries) -> VertexSet:
    if not isinstance(entries, list):
        raise ValueError(f"vertex set {entries!r} must be a list")
    try:
        return VertexSet(entries)
    except TypeError as exc:
        raise ValueError(f"vertex set {entries!r} holds a non-integer") from exc


def labeling_to_obj(lab: FaceLabeling) -> dict:
    return {"vertices": [list(f.elements) for f in lab.faces]}


def labeling_from_obj(obj) -> FaceLabeling:
    if not isinstance(obj, dict) or not isinstance(obj.get("vertices"), list):
        raise ValueError("labeling JSON must carry a vertices list")
    return FaceLabeling(tuple(_vertex_list(f) for f in obj["vertices"]))


def graph_to_obj(g: LabeledGraph) -> dict:
    if g.labels is None:
        vertices = g.vertex_count
    else:
        vertices = [list(lbl.elements) for lbl in g.labels]
    return {"vertices": vertices, "edges": [list(e) for e in g.edges]}


def graph_from_obj(obj) -> LabeledGraph:
    if not isinstance(obj, dict):
        raise ValueError("graph JSON must be an object")
    vertices = obj.get("vertices")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise ValueError("graph JSON must carry an edge list")
    labels = None
    if isinstance(vertices, int):
        count = vertices
    elif isinstance(vertices, list):
        count = len(vertices)
        labels = tuple(_vertex_list(f) for f in vertices)
    else:
        raise ValueError("vertices must be a count or a list of face labels")
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, int) for v in e)
        ):
            raise ValueError(f"edge {e!r} must be a pair of vertex indices")
        pairs.append((e[0], e[1]))
    return LabeledGraph(count, tuple(sorted(pairs)), labels)


def reconstruction_report_to_obj(rep: ReconstructionReport) -> dict:
    return {
        "status": rep.status,
        "complex": None if rep.complex is None else complex_to_obj(rep.complex),
        "orientations_tried": rep.orientations_tried,
        "both_admissible": rep.both_orientations_admissible,
    }


def verification_report_to_obj(rep: VerificationReport) -> dict:
    return {
        "universe_size": rep.universe_size,
        "pair_checks": rep.pair_checks,
        "failures": list(rep.failures),
        "notes": list(rep.notes),
    }


def generators_to_obj(sets: list[VertexSet]) -> dict:
    return {"sets": [list(s.elements) for s in sets]}


def dumps(obj) -> str:
    """Canonical single-line JSON text (insertion-ordered keys, no floats)."""
    return json.dumps(obj, separators=(", ", ": "))


def loads(text: str):
    return json.loads(text)
