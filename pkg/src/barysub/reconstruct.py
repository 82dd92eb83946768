"""Recover a complex from its barycentric subdivision or comparability graph.

The comparability graph of a complex's face poset determines the complex up
to isomorphism: orient the graph transitively, read each vertex as the set
of sources below it, and check that those sets reproduce a face family.
Every successful orientation yields the same complex up to isomorphism, so
the reconstruction is well defined; the report says how many orientations
were tried and whether more than one of them succeeded (which happens
exactly for the boundary-of-simplex family, where the poset and its
reversal both arise from complexes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    SimplicialComplex,
    VertexSet,
    canonical_form,
    complex_from_facets,
)
from .errors import EmptyInput, NotAFacePoset, NotTransitive
from .graphs import LabeledGraph, Orientation, one_skeleton_graph, transitive_orientations

STATUS_OK = "ok"
STATUS_NOT_ORIENTABLE = "not_orientable"
STATUS_NOT_FACE_POSET = "not_face_poset"
STATUS_NOT_FLAG = "not_flag"


@dataclass(frozen=True)
class FacePoset:
    """A strict partial order on graph vertices with longest-path grades."""

    elements: tuple[int, ...]
    relation: frozenset[tuple[int, int]]
    grades: tuple[int, ...]

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.relation

    def sources(self) -> tuple[int, ...]:
        heads = {b for _, b in self.relation}
        return tuple(v for v in self.elements if v not in heads)

    def sinks(self) -> tuple[int, ...]:
        tails = {a for a, _ in self.relation}
        return tuple(v for v in self.elements if v not in tails)


def poset_from_orientation(g: LabeledGraph, o: Orientation) -> FacePoset:
    """Read an orientation as a strict order; raises NotTransitive if it is not one."""
    n = g.vertex_count
    succ = [[] for _ in range(n)]
    rel = set()
    for tail, head in o.arcs():
        succ[tail].append(head)
        rel.add((tail, head))
    for a in range(n):
        for b in succ[a]:
            for c in succ[b]:
                if (a, c) not in rel:
                    raise NotTransitive(f"{a}->{b}->{c} without {a}->{c}")
    indeg = [0] * n
    for _, b in rel:
        indeg[b] += 1
    grade = [0] * n
    queue = [v for v in range(n) if indeg[v] == 0]
    topo = []
    while queue:
        v = queue.pop()
        topo.append(v)
        for w in succ[v]:
            if grade[w] < grade[v] + 1:
                grade[w] = grade[v] + 1
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(topo) != n:
        raise NotTransitive("orientation contains a directed cycle")
    return FacePoset(tuple(range(n)), frozenset(rel), tuple(grade))


def complex_from_face_poset(p: FacePoset) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Rebuild the complex whose face poset is p, or raise NotAFacePoset.

    Sources become the ground vertices, numbered 1.. in ascending element
    order; every element maps to its down-set of sources. The map must be
    injective, must turn the order into inclusion, and the down-sets of the
    maximal elements must generate exactly the given family. Returns the
    complex and the source tuple.
    """
    sources = p.sources()
    if not sources:
        raise NotAFacePoset("poset has no minimal elements")
    if len(sources) > 64:
        raise NotAFacePoset(f"{len(sources)} minimal elements exceed the ground cap")
    src_bit = {s: 1 << i for i, s in enumerate(sources)}
    down: dict[int, int] = {}
    for v in p.elements:
        m = 0
        for s in sources:
            if s == v or p.less(s, v):
                m |= src_bit[s]
        down[v] = m
    masks = list(down.values())
    if len(set(masks)) != len(masks):
        raise NotAFacePoset("source down-sets are not injective")
    for a in down:
        for b in down:
            if a == b:
                continue
            if (down[a] & ~down[b] == 0) != p.less(a, b):
                raise NotAFacePoset("order does not match down-set inclusion")
    sinks = p.sinks()
    cx = complex_from_facets(
        len(sources), [VertexSet.from_mask(down[t]) for t in sinks]
    )
    if {f.mask for f in cx.facets} != {down[t] for t in sinks}:
        raise NotAFacePoset("maximal down-sets are not an antichain")
    if {f.mask for f in cx.faces()} != set(masks):
        raise NotAFacePoset("down-sets do not form the full face family")
    return cx, sources


@dataclass(frozen=True)
class ReconstructionReport:
    """Outcome of a reconstruction attempt.

    ``status`` is "ok", "not_orientable", "not_face_poset" or "not_flag";
    ``complex`` is the recovered complex when ok, else None;
    ``orientations_tried`` counts the transitive orientations examined over
    all components; ``both_orientations_admissible`` says whether some
    component admitted at least two successful orientations.
    ``source_map[i-1]`` is the input-graph vertex that became ground
    vertex i.
    """

    status: str
    complex: SimplicialComplex | None
    orientations_tried: int
    both_orientations_admissible: bool
    source_map: tuple[int, ...] | None = None


def _graph_components(g: LabeledGraph) -> list[list[int]]:
    adj = [[] for _ in range(g.vertex_count)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * g.vertex_count
    comps = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _induced(g: LabeledGraph, verts: list[int]) -> LabeledGraph:
    idx = {v: i for i, v in enumerate(verts)}
    edges = tuple(
        sorted((idx[i], idx[j]) for i, j in g.edges if i in idx and j in idx)
    )
    return LabeledGraph(len(verts), edges)


def reconstruct_from_comparability_graph(g: LabeledGraph) -> ReconstructionReport:
    """Recover, up to isomorphism, the complex whose face-poset graph is g.

    Works per connected component: enumerate transitive orientations, keep
    those whose poset is a face poset, verify all survivors agree up to
    isomorphism, then take the disjoint union of one representative per
    component. Fails with "not_orientable" when some component has no
    transitive orientation and "not_face_poset" when none of a component's
    orientations is a face poset.
    """
    if g.vertex_count == 0:
        raise EmptyInput("graph has no vertices")
    tried = 0
    any_double = False
    picked: list[tuple[SimplicialComplex, tuple[int, ...]]] = []
    status = STATUS_OK
    for verts in _graph_components(g):
        sub = _induced(g, verts)
        orientations = transitive_orientations(sub)
        tried += len(orientations)
        if not orientations:
            status = STATUS_NOT_ORIENTABLE
            break
        successes: list[tuple[SimplicialComplex, tuple[int, ...]]] = []
        for o in orientations:
            poset = poset_from_orientation(sub, o)
            try:
                cx, sources = complex_from_face_poset(poset)
            except NotAFacePoset:
                continue
            successes.append((cx, tuple(verts[s] for s in sources)))
        if not successes:
            status = STATUS_NOT_FACE_POSET
            break
        forms = {canonical_form(cx).sort_key for cx, _ in successes}
        if len(forms) != 1:
            raise RuntimeError(
                "successful orientations disagree; rigidity violated"
            )
        if len(successes) >= 2:
            any_double = True
        picked.append(successes[0])
    if status != STATUS_OK:
        return ReconstructionReport(status, None, tried, False)
    ground = sum(cx.ground_size for cx, _ in picked)
    facets: list[VertexSet] = []
    source_map: list[int] = []
    offset = 0
    for cx, sources in picked:
        for f in cx.facets:
            facets.append(VertexSet(offset + e for e in f.elements))
        source_map.extend(sources)
        offset += cx.ground_size
    merged = complex_from_facets(ground, facets)
    return ReconstructionReport(
        STATUS_OK, merged, tried, any_double, tuple(source_map)
    )


def reconstruct_from_subdivision(b: SimplicialComplex) -> ReconstructionReport:
    """Recover the complex whose barycentric subdivision is b, up to isomorphism.

    A subdivision is a flag complex (all minimal nonfaces have two
    elements); inputs failing that test report "not_flag". Otherwise the
    complex is determined by the subdivision's 1-skeleton and the
    comparability-graph path applies.
    """
    if any(len(nf) != 2 for nf in b.minimal_nonfaces()):
        return ReconstructionReport(STATUS_NOT_FLAG, None, 0, False)
    return reconstruct_from_comparability_graph(one_skeleton_graph(b))


def is_complex_comparability_graph(g: LabeledGraph) -> bool:
    """Whether g is the face-poset comparability graph of some complex."""
    try:
        return reconstruct_from_comparability_graph(g).status == STATUS_OK
    except EmptyInput:
        return False
