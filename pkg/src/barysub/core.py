"""Simplicial complexes as facet antichains over a bounded ground set.

Faces are subsets of {1, ..., n} stored as integer bit masks (bit i-1 is
vertex i), so inclusion tests are single word operations. A complex stores
only its facet antichain plus a flag separating the void complex (no faces
at all) from the empty complex (just the empty face); everything else
(faces, dimension, minimal nonfaces, skeleta, connectivity, canonical form)
is derived on demand.

All outputs are deterministically ordered: faces by (cardinality, lex),
everything downstream by construction from that order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import EmptyInput, GroundSetTooLarge, SkeletonIndexOutOfRange

MAX_GROUND = 64


def _mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _mask_key(mask: int) -> tuple[int, tuple[int, ...]]:
    # Deterministic face order: cardinality, then lex on sorted elements.
    return (mask.bit_count(), _mask_elements(mask))


@functools.total_ordering
class VertexSet:
    """Immutable subset of the ground positions 1..64, backed by a bit mask.

    The comparison operators implement the deterministic total order used
    for all output: first by cardinality, then lexicographically on the
    element tuple. They are NOT containment tests; use ``issubset`` /
    ``issuperset`` for inclusion.
    """

    __slots__ = ("_mask",)

    def __init__(self, elements=()):
        mask = 0
        for e in elements:
            e = int(e)
            if not 1 <= e <= MAX_GROUND:
                raise ValueError(f"vertex {e} outside 1..{MAX_GROUND}")
            mask |= 1 << (e - 1)
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0 or mask.bit_length() > MAX_GROUND:
            raise ValueError(f"mask {mask:#x} outside the {MAX_GROUND}-bit range")
        vs = cls.__new__(cls)
        vs._mask = mask
        return vs

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def elements(self) -> tuple[int, ...]:
        return _mask_elements(self._mask)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return _mask_key(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __contains__(self, vertex: int) -> bool:
        return 1 <= vertex <= MAX_GROUND and (self._mask >> (vertex - 1)) & 1 == 1

    def __iter__(self):
        return iter(_mask_elements(self._mask))

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self._mask == other._mask

    def __hash__(self) -> int:
        return hash(self._mask)

    def __lt__(self, other: "VertexSet") -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return _mask_key(self._mask) < _mask_key(other._mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self._mask & ~other._mask == 0

    def issuperset(self, other: "VertexSet") -> bool:
        return other._mask & ~self._mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self._mask & other._mask == 0

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & other._mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask | other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & ~other._mask)

    def __repr__(self) -> str:
        return f"VertexSet({self.elements!r})"


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facet antichain over ground set {1..ground_size}.

    ``void=True`` encodes the void complex (no faces, not even the empty
    one); it always has an empty facet tuple. ``void=False`` with no facets
    is the empty complex, whose single face is the empty set. Both have
    dimension -1. Construct through :func:`complex_from_facets`, which
    normalizes arbitrary generating families.
    """

    ground_size: int
    facets: tuple[VertexSet, ...]
    void: bool = False

    def __post_init__(self):
        n = self.ground_size
        if n < 1:
            raise EmptyInput("ground set must have at least one element")
        if n > MAX_GROUND:
            raise GroundSetTooLarge(f"ground set size {n} exceeds {MAX_GROUND}")
        if self.void and self.facets:
            raise ValueError("void complex cannot carry facets")
        full = (1 << n) - 1
        prev = None
        for f in self.facets:
            if not isinstance(f, VertexSet) or f.mask == 0 or f.mask & ~full:
                raise ValueError(f"facet {f!r} invalid over ground size {n}")
            key = f.sort_key
            if prev is not None and key <= prev:
                raise ValueError("facets must be strictly sorted by (size, lex)")
            prev = key

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    @property
    def support(self) -> VertexSet:
        m = 0
        for f in self.facets:
            m |= f.mask
        return VertexSet.from_mask(m)

    @property
    def has_all_vertices(self) -> bool:
        return not self.void and self.support.mask == self.full_mask

    def is_void(self) -> bool:
        return self.void

    def is_empty_complex(self) -> bool:
        return not self.void and not self.facets

    def contains_face(self, face: VertexSet) -> bool:
        if self.void:
            return False
        if face.mask == 0:
            return True
        return any(face.issubset(f) for f in self.facets)

    def _face_masks(self) -> list[int]:
        seen = set()
        for f in self.facets:
            m = f.mask
            sub = m
            while sub:
                seen.add(sub)
                sub = (sub - 1) & m
        return sorted(seen, key=_mask_key)

    def faces(self) -> list[VertexSet]:
        """All nonempty faces, sorted by (cardinality, lex)."""
        return [VertexSet.from_mask(m) for m in self._face_masks()]

    def dimension(self) -> int:
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        """True when all facets share one dimension (vacuously for <= 1 facet)."""
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def euler_characteristic(self) -> int:
        """Reduced-by-nothing Euler characteristic: sum of (-1)^dim over faces."""
        total = 0
        for m in self._face_masks():
            total += -1 if m.bit_count() % 2 == 0 else 1
        return total

    def minimal_nonfaces(self) -> list[VertexSet]:
        """Inclusion-minimal nonfaces, sorted by (cardinality, lex).

        A set is a nonface when it lies in no facet, so the minimal nonfaces
        are exactly the minimal transversals of the facet complements.
        Computed by Berge multiplication: fold the complements in one at a
        time, keeping the transversal family minimal after each step. Never
        enumerates the 2^n subsets.
        """
        n = self.ground_size
        if self.void:
            return [VertexSet.from_mask(0)]
        if not self.facets:
            return [VertexSet((i,)) for i in range(1, n + 1)]
        full = self.full_mask
        hyperedges = sorted((full & ~f.mask for f in self.facets), key=_mask_key)
        if hyperedges[0] == 0:
            return []  # some facet is the whole ground set
        trans = [1 << (b - 1) for b in _mask_elements(hyperedges[0])]
        for edge in hyperedges[1:]:
            nxt = [t for t in trans if t & edge]
            for t in trans:
                if t & edge:
                    continue
                for b in _mask_elements(edge):
                    nxt.append(t | (1 << (b - 1)))
            trans = _minimal_sets(nxt)
        return [VertexSet.from_mask(m) for m in sorted(set(trans), key=_mask_key)]

    def skeleton(self, i: int) -> "SimplicialComplex":
        """The i-skeleton: all faces of dimension at most i. Requires 0 <= i <= dim."""
        dim = self.dimension()
        if i < 0 or i > dim:
            raise SkeletonIndexOutOfRange(f"skeleton index {i} outside 0..{dim}")
        limit = i + 1
        keep = [m for m in self._face_masks() if m.bit_count() == limit]
        keep.extend(f.mask for f in self.facets if len(f) <= limit)
        return complex_from_facets(self.ground_size, [VertexSet.from_mask(m) for m in keep])

    def _vertex_partition(self) -> list[list[int]]:
        # Union-find over ground positions; every facet is a clique of the
        # 1-skeleton, so joining within facets gives the skeleton components.
        parent = list(range(self.ground_size + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.facets:
            els = f.elements
            r = find(els[0])
            for e in els[1:]:
                parent[find(e)] = r
        groups: dict[int, list[int]] = {}
        for v in range(1, self.ground_size + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        """Connectivity of the 1-skeleton on all ground positions."""
        return len(self._vertex_partition()) == 1

    def connected_components(self) -> list["Component"]:
        """Components relabeled onto compact ground sets, original labels kept.

        Ordered by smallest original vertex. A vertex carried by no facet
        forms its own component (empty, or void when the complex is void).
        """
        out = []
        for group in self._vertex_partition():
            k = len(group)
            if self.void:
                out.append(Component(void_complex(k), tuple(group)))
                continue
            index = {v: j + 1 for j, v in enumerate(group)}
            gmask = 0
            for v in group:
                gmask |= 1 << (v - 1)
            local = [
                VertexSet(index[v] for v in f.elements)
                for f in self.facets
                if f.mask & ~gmask == 0
            ]
            out.append(Component(complex_from_facets(k, local), tuple(group)))
        return out


@dataclass(frozen=True)
class Component:
    """A connected component together with its original vertex labels.

    ``vertices[j]`` is the original ground position of component vertex j+1.
    """

    complex: SimplicialComplex
    vertices: tuple[int, ...]


def _minimal_sets(masks: list[int]) -> list[int]:
    # Keep only inclusion-minimal masks.
    uniq = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(r & ~m == 0 for r in kept):
            kept.append(m)
    return kept


def _normalize_facets(ground_size: int, facets) -> tuple[VertexSet, ...]:
    full = (1 << ground_size) - 1
    masks = set()
    for f in facets:
        if isinstance(f, VertexSet):
            m = f.mask
        else:
            m = VertexSet(f).mask
        if m & ~full:
            raise ValueError(f"facet {f!r} outside ground set of size {ground_size}")
        if m:
            masks.add(m)
    by_size = sorted(masks, key=lambda m: -m.bit_count())
    maximal: list[int] = []
    for m in by_size:
        if not any(m | k == k for k in maximal):
            maximal.append(m)
    return tuple(VertexSet.from_mask(m) for m in sorted(maximal, key=_mask_key))


def complex_from_facets(ground_size: int, facets) -> SimplicialComplex:
    """Build a complex from any generating family of faces.

    Empty members are dropped, non-maximal members absorbed, and the facet
    antichain stored in (cardinality, lex) order. An empty family yields the
    empty complex ``{∅}``; use :func:`void_complex` for the void complex.
    """
    return SimplicialComplex(ground_size, _normalize_facets(ground_size, facets))


def void_complex(ground_size: int) -> SimplicialComplex:
    return SimplicialComplex(ground_size, (), void=True)


def empty_complex(ground_size: int) -> SimplicialComplex:
    return SimplicialComplex(ground_size, ())


def full_simplex(ground_size: int) -> SimplicialComplex:
    return complex_from_facets(ground_size, [range(1, ground_size + 1)])


@dataclass(frozen=True)
class VertexBijection:
    """A permutation of {1..n}; ``mapping[i-1]`` is the image of vertex i."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(1, n + 1)):
            raise ValueError("mapping is not a permutation of 1..n")

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __call__(self, vertex: int) -> int:
        return self.mapping[vertex - 1]

    def apply(self, s: VertexSet) -> VertexSet:
        return VertexSet(self.mapping[v - 1] for v in s.elements)

    def inverse(self) -> "VertexBijection":
        inv = [0] * len(self.mapping)
        for i, img in enumerate(self.mapping):
            inv[img - 1] = i + 1
        return VertexBijection(tuple(inv))


def relabel_complex(cx: SimplicialComplex, bijection) -> SimplicialComplex:
    """Apply a vertex bijection (VertexBijection or image tuple) to a complex."""
    bij = bijection if isinstance(bijection, VertexBijection) else VertexBijection(tuple(bijection))
    if bij.size != cx.ground_size:
        raise ValueError("bijection size does not match ground set")
    if cx.void:
        return void_complex(cx.ground_size)
    return complex_from_facets(cx.ground_size, [bij.apply(f) for f in cx.facets])


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class fingerprint: relabeled facets on a canonical ground set.

    Two complexes are isomorphic exactly when their canonical forms are equal.
    """

    ground_size: int
    facets: tuple[VertexSet, ...]
    void: bool = False

    @property
    def sort_key(self):
        return (self.void, self.ground_size, tuple(f.sort_key for f in self.facets))


def _initial_colors(k: int, fmasks: list[int]) -> list:
    """Isomorphism-invariant starting colors for the refinement search."""
    budget = sum(1 << m.bit_count() for m in fmasks)
    if fmasks and budget <= 60000:
        faces = set()
        for m in fmasks:
            sub = m
            while sub:
                faces.add(sub)
                sub = (sub - 1) & m
        top = max(m.bit_count() for m in fmasks)
        deg = [[0] * (top + 1) for _ in range(k)]
        for f in faces:
            s = f.bit_count()
            rem = f
            while rem:
                low = rem & -rem
                deg[low.bit_length() - 1][s] += 1
                rem ^= low
        return [tuple(d) for d in deg]
    prof: list[list[int]] = [[] for _ in range(k)]
    for m in fmasks:
        s = m.bit_count()
        rem = m
        while rem:
            low = rem & -rem
            prof[low.bit_length() - 1].append(s)
            rem ^= low
    return [tuple(sorted(p)) for p in prof]


def _canonical_connected(cx: SimplicialComplex) -> tuple[tuple[int, ...], tuple]:
    """Search for the least facet encoding of one connected complex.

    Individualization-refinement: refine an ordered partition of the
    vertices by facet-incidence signatures, branch on the first
    non-singleton cell, and keep the lexicographically least encoding over
    all discrete leaves. Returns (labels, encoding) where ``labels[v-1]``
    is the 0-based canonical position of vertex v and the encoding is the
    sorted tuple of relabeled facet keys.
    """
    k = cx.ground_size
    fmasks = [f.mask for f in cx.facets]
    nf = len(fmasks)
    members = [tuple(b - 1 for b in _mask_elements(m)) for m in fmasks]
    incident: list[list[int]] = [[] for _ in range(k)]
    for fi, mem in enumerate(members):
        for v in mem:
            incident[v].append(fi)

    init = _initial_colors(k, fmasks)
    order = sorted(set(init))
    rank = {val: i for i, val in enumerate(order)}
    cells: list[list[int]] = [[] for _ in order]
    for v in range(k):
        cells[rank[init[v]]].append(v)
    cells = [c for c in cells if c]

    def refine(cells: list[list[int]]) -> list[list[int]]:
        while True:
            color = [0] * k
            for ci, cell in enumerate(cells):
                for v in cell:
                    color[v] = ci
            fsig = [tuple(sorted(color[v] for v in members[fi])) for fi in range(nf)]
            new_cells: list[list[int]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    sig = tuple(sorted(fsig[fi] for fi in incident[v]))
                    groups.setdefault(sig, []).append(v)
                if len(groups) > 1:
                    changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            if not changed:
                return new_cells
            cells = new_cells

    best_enc: list = [None]
    best_labels: list = [None]

    def encode(cells: list[list[int]]) -> tuple[tuple, list[int]]:
        labels = [0] * k
        for pos, cell in enumerate(cells):
            labels[cell[0]] = pos
        keys = []
        for mem in members:
            els = tuple(sorted(labels[v] + 1 for v in mem))
            keys.append((len(els), els))
        return tuple(sorted(keys)), labels

    def descend(cells: list[list[int]]) -> None:
        cells = refine(cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            enc, labels = encode(cells)
            if best_enc[0] is None or enc < best_enc[0]:
                best_enc[0] = enc
                best_labels[0] = labels
            return
        cell = cells[target]
        rest = cells[target + 1:]
        head = cells[:target]
        # Vertices lying in exactly the same facets are swapped by an
        # automorphism fixing everything else, so one representative per
        # incidence class covers all branches of its class.
        seen_incidence = set()
        for v in cell:
            key = tuple(incident[v])
            if key in seen_incidence:
                continue
            seen_incidence.add(key)
            descend(head + [[v], [u for u in cell if u != v]] + rest)

    descend(cells)
    return tuple(best_labels[0]), best_enc[0]


@functools.lru_cache(maxsize=16384)
def _canonical(cx: SimplicialComplex) -> tuple[CanonicalForm, tuple[int, ...]]:
    n = cx.ground_size
    if cx.void:
        return CanonicalForm(n, (), True), tuple(range(1, n + 1))
    parts = []
    for comp in cx.connected_components():
        labels, enc = _canonical_connected(comp.complex)
        parts.append((comp.complex.ground_size, enc, comp.vertices, labels))
    parts.sort(key=lambda t: (t[0], t[1]))
    labeling = [0] * n
    out_facets: list[VertexSet] = []
    offset = 0
    for g, enc, orig, labels in parts:
        for j in range(g):
            labeling[orig[j] - 1] = offset + labels[j] + 1
        for _, els in enc:
            out_facets.append(VertexSet(offset + e for e in els))
        offset += g
    out_facets.sort(key=lambda f: f.sort_key)
    return CanonicalForm(n, tuple(out_facets), False), tuple(labeling)


def canonical_form(cx: SimplicialComplex) -> CanonicalForm:
    """Canonical form; equal forms exactly characterize isomorphism."""
    return _canonical(cx)[0]


def canonical_labeling(cx: SimplicialComplex) -> VertexBijection:
    """A bijection carrying the complex onto its canonical form's labels."""
    return VertexBijection(_canonical(cx)[1])


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> VertexBijection | None:
    """An isomorphism witness from a to b, or None.

    Complexes over different ground sizes are never isomorphic here; vertices
    outside all facets participate like any others (they must map onto
    vertices outside all facets).
    """
    if a.ground_size != b.ground_size or a.void != b.void:
        return None
    fa, la = _canonical(a)
    fb, lb = _canonical(b)
    if fa != fb:
        return None
    inv_b = [0] * b.ground_size
    for v, img in enumerate(lb, start=1):
        inv_b[img - 1] = v
    return VertexBijection(tuple(inv_b[la[v - 1] - 1] for v in range(1, a.ground_size + 1)))
