"""Complexes derived from a complex: subdivision, dual, complement, ideals.

The barycentric subdivision introduces one vertex per nonempty face of the
input; its facets are the saturated chains inside the input's facets. The
pairing between new vertices and old faces is returned alongside the
subdivision as a :class:`FaceLabeling` so callers can translate back.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import (
    MAX_GROUND,
    SimplicialComplex,
    VertexSet,
    complex_from_facets,
    empty_complex,
    full_simplex,
    void_complex,
)
from .errors import EmptyInput, GroundSetTooLarge, VoidComplex


@dataclass(frozen=True)
class FaceLabeling:
    """Pairing between subdivision vertices and the faces they replace.

    Subdivision vertex i corresponds to ``faces[i-1]``, with faces listed in
    (cardinality, lex) order.
    """

    faces: tuple[VertexSet, ...]

    def face_of(self, vertex: int) -> VertexSet:
        return self.faces[vertex - 1]

    def vertex_of(self, face: VertexSet) -> int:
        try:
            return self.faces.index(face) + 1
        except ValueError:
            raise KeyError(f"{face!r} is not a face of the subdivided complex") from None


def _require_subdividable(cx: SimplicialComplex) -> None:
    if cx.void:
        raise VoidComplex("the void complex has no face to subdivide")
    if not cx.facets:
        raise EmptyInput("the empty complex has no vertex to subdivide")


def barycentric_subdivision(cx: SimplicialComplex) -> tuple[SimplicialComplex, FaceLabeling]:
    """Subdivide once; returns the new complex and the vertex/face pairing.

    Facets of the result are the maximal chains of faces ordered by
    inclusion, one per permutation of each facet's vertices, so a facet F
    contributes |F|! chains. Raises GroundSetTooLarge when the input has
    more than 64 nonempty faces.
    """
    _require_subdividable(cx)
    faces = cx.faces()
    if len(faces) > MAX_GROUND:
        raise GroundSetTooLarge(
            f"subdivision needs {len(faces)} vertices, cap is {MAX_GROUND}"
        )
    index = {f.mask: i + 1 for i, f in enumerate(faces)}
    chains = set()
    for facet in cx.facets:
        for order in permutations(facet.elements):
            prefix = 0
            chain = 0
            for v in order:
                prefix |= 1 << (v - 1)
                chain |= 1 << (index[prefix] - 1)
            chains.add(chain)
    sub = complex_from_facets(len(faces), [VertexSet.from_mask(c) for c in chains])
    return sub, FaceLabeling(tuple(faces))


def iterated_subdivision(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    """Apply the subdivision k times (k >= 0; k = 0 returns the input)."""
    if k < 0:
        raise ValueError("subdivision count must be >= 0")
    out = cx
    for _ in range(k):
        out, _ = barycentric_subdivision(out)
    return out


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """The dual complex: facets are ground-complements of the minimal nonfaces.

    An involution on complexes over a fixed ground set. The full simplex and
    the void complex are each other's duals.
    """
    full = cx.full_mask
    duals = [VertexSet.from_mask(full & ~nf.mask) for nf in cx.minimal_nonfaces()]
    if not duals:
        return void_complex(cx.ground_size)
    if duals == [VertexSet.from_mask(0)]:
        return empty_complex(cx.ground_size)
    return complex_from_facets(cx.ground_size, duals)


def complement_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Facet-wise ground-complement; an involution.

    The empty complex (facet list {∅}) maps to the full simplex and back.
    """
    if cx.void:
        return void_complex(cx.ground_size)
    if not cx.facets:
        return full_simplex(cx.ground_size)
    full = cx.full_mask
    comp = [VertexSet.from_mask(full & ~f.mask) for f in cx.facets]
    if all(f.mask == 0 for f in comp):
        return empty_complex(cx.ground_size)
    return complex_from_facets(cx.ground_size, comp)


def stanley_reisner_generators(cx: SimplicialComplex) -> list[VertexSet]:
    """Supports of the minimal monomial generators of the nonface ideal."""
    return cx.minimal_nonfaces()


def facet_ideal_generators(cx: SimplicialComplex) -> list[VertexSet]:
    """Supports of the facet ideal generators: the facet list itself.

    The empty complex contributes the empty support (unit monomial); the
    void complex contributes nothing.
    """
    if cx.void:
        return []
    if not cx.facets:
        return [VertexSet.from_mask(0)]
    return list(cx.facets)
