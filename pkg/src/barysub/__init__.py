"""Combinatorial operators on simplicial complexes, and reconstruction of a
complex (up to isomorphism) from its barycentric subdivision or the
comparability graph of its face poset."""

__version__ = "0.1.0"

from .errors import (
    BarysubError,
    EmptyInput,
    GroundSetTooLarge,
    NotAFacePoset,
    NotTransitive,
    SkeletonIndexOutOfRange,
    UniverseTooLarge,
    VoidComplex,
)
from .core import (
    MAX_GROUND,
    CanonicalForm,
    Component,
    SimplicialComplex,
    VertexBijection,
    VertexSet,
    are_isomorphic,
    canonical_form,
    canonical_labeling,
    complex_from_facets,
    empty_complex,
    full_simplex,
    relabel_complex,
    void_complex,
)
from .derived import (
    FaceLabeling,
    alexander_dual,
    barycentric_subdivision,
    complement_complex,
    facet_ideal_generators,
    iterated_subdivision,
    stanley_reisner_generators,
)
from .graphs import (
    LabeledGraph,
    Orientation,
    clique_complex,
    comparability_graph,
    graph_complement,
    inclusion_orientation,
    independence_complex,
    is_transitively_orientable,
    one_skeleton_graph,
    transitive_orientations,
)
from .reconstruct import (
    STATUS_NOT_FACE_POSET,
    STATUS_NOT_FLAG,
    STATUS_NOT_ORIENTABLE,
    STATUS_OK,
    FacePoset,
    ReconstructionReport,
    complex_from_face_poset,
    is_complex_comparability_graph,
    poset_from_orientation,
    reconstruct_from_comparability_graph,
    reconstruct_from_subdivision,
)
from .verify import (
    VerificationReport,
    enumerate_complexes,
    graph_canonical_form,
    graphs_isomorphic,
    verify_equivalences,
    verify_subdivision_rigidity,
)

__all__ = [
    "BarysubError",
    "CanonicalForm",
    "Component",
    "EmptyInput",
    "FaceLabeling",
    "FacePoset",
    "GroundSetTooLarge",
    "LabeledGraph",
    "MAX_GROUND",
    "NotAFacePoset",
    "NotTransitive",
    "Orientation",
    "ReconstructionReport",
    "STATUS_NOT_FACE_POSET",
    "STATUS_NOT_FLAG",
    "STATUS_NOT_ORIENTABLE",
    "STATUS_OK",
    "SimplicialComplex",
    "SkeletonIndexOutOfRange",
    "UniverseTooLarge",
    "VerificationReport",
    "VertexBijection",
    "VertexSet",
    "VoidComplex",
    "alexander_dual",
    "are_isomorphic",
    "barycentric_subdivision",
    "canonical_form",
    "canonical_labeling",
    "clique_complex",
    "comparability_graph",
    "complement_complex",
    "complex_from_face_poset",
    "complex_from_facets",
    "empty_complex",
    "enumerate_complexes",
    "facet_ideal_generators",
    "full_simplex",
    "graph_canonical_form",
    "graph_complement",
    "graphs_isomorphic",
    "inclusion_orientation",
    "independence_complex",
    "is_complex_comparability_graph",
    "is_transitively_orientable",
    "iterated_subdivision",
    "one_skeleton_graph",
    "poset_from_orientation",
    "reconstruct_from_comparability_graph",
    "reconstruct_from_subdivision",
    "relabel_complex",
    "stanley_reisner_generators",
    "transitive_orientations",
    "verify_equivalences",
    "verify_subdivision_rigidity",
    "void_complex",
]
