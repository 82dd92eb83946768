"""Brute-force oracles and corpus builders shared by the test modules.

Everything here is deliberately naive: definitions executed literally,
independent of the library's algorithms, so the two can disagree loudly.
"""

from __future__ import annotations

import functools
from itertools import combinations, permutations

from barysub import (
    LabeledGraph,
    SimplicialComplex,
    VertexSet,
    complex_from_facets,
    enumerate_complexes,
)


def mask_of(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << (e - 1)
    return m


def cx(n: int, *facets) -> SimplicialComplex:
    return complex_from_facets(n, [list(f) for f in facets])


def facet_sets(c: SimplicialComplex) -> set[frozenset[int]]:
    return {frozenset(f.elements) for f in c.facets}


def brute_faces(c: SimplicialComplex) -> set[frozenset[int]]:
    """Nonempty faces via itertools powersets of each facet."""
    out: set[frozenset[int]] = set()
    for f in c.facets:
        els = f.elements
        for r in range(1, len(els) + 1):
            for sub in combinations(els, r):
                out.add(frozenset(sub))
    return out


def brute_minimal_nonfaces(c: SimplicialComplex) -> list[frozenset[int]]:
    """Scan all 2^n subsets; n <= 12 only."""
    n = c.ground_size
    assert n <= 12, "oracle scan too large"
    fmasks = [f.mask for f in c.facets]

    def is_face(m: int) -> bool:
        if c.void:
            return False
        if m == 0:
            return True
        return any(m & ~fm == 0 for fm in fmasks)

    found = []
    for m in range(1 << n):
        if is_face(m):
            continue
        minimal = True
        rem = m
        while rem:
            low = rem & -rem
            if not is_face(m ^ low):
                minimal = False
                break
            rem ^= low
        if minimal:
            found.append(m)
    found.sort(key=lambda m: (m.bit_count(), sorted(i + 1 for i in range(n) if m >> i & 1)))
    return [frozenset(i + 1 for i in range(n) if m >> i & 1) for m in found]


def brute_isomorphic(a: SimplicialComplex, b: SimplicialComplex):
    """All-permutations isomorphism oracle; returns a mapping tuple or None."""
    if a.ground_size != b.ground_size or a.void != b.void:
        return None
    n = a.ground_size
    assert n <= 7, "oracle needs n <= 7"
    target = facet_sets(b)
    source = facet_sets(a)
    if len(source) != len(target):
        return None
    for perm in permutations(range(1, n + 1)):
        if {frozenset(perm[v - 1] for v in f) for f in source} == target:
            return perm
    return None


def brute_transitive_orientations(g: LabeledGraph) -> list[tuple[int, ...]]:
    """All 2^|E| head assignments, filtered by the transitivity definition."""
    m = len(g.edges)
    assert m <= 20, "oracle needs |E| <= 20"
    results = []
    for bits in range(1 << m):
        heads = tuple(
            g.edges[k][0] if bits >> k & 1 else g.edges[k][1] for k in range(m)
        )
        arcs = set()
        succ: dict[int, list[int]] = {}
        for k in range(m):
            i, j = g.edges[k]
            h = heads[k]
            t = i if h == j else j
            arcs.add((t, h))
            succ.setdefault(t, []).append(h)
        ok = True
        for (a, b) in arcs:
            for cnode in succ.get(b, ()):
                if (a, cnode) not in arcs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(heads)
    results.sort(key=lambda hs: tuple(0 if h == e[1] else 1 for e, h in zip(g.edges, hs)))
    return results


def chain_count(c: SimplicialComplex) -> int:
    """Saturated singleton-to-facet chains, counted by memoized DFS."""
    n = c.ground_size
    fmasks = {f.mask for f in c.facets}

    def is_face(m: int) -> bool:
        return any(m & ~fm == 0 for fm in fmasks)

    @functools.lru_cache(maxsize=None)
    def up(m: int) -> int:
        if m in fmasks:
            return 1
        total = 0
        for b in range(n):
            nm = m | (1 << b)
            if nm != m and is_face(nm):
                total += up(nm)
        return total

    return sum(up(1 << b) for b in range(n) if is_face(1 << b))


def graph_brute_iso(a: LabeledGraph, b: LabeledGraph) -> bool:
    """All-permutations graph isomorphism; vertex counts <= 8."""
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    n = a.vertex_count
    assert n <= 8, "oracle needs <= 8 vertices"
    tgt = set(b.edges)
    for perm in permutations(range(n)):
        mapped = {tuple(sorted((perm[i], perm[j]))) for i, j in a.edges}
        if mapped == tgt:
            return True
    return False


def random_complex(rng, n: int, max_facets: int | None = None) -> SimplicialComplex:
    """A random complex on [n]; the support may be a proper subset of [n]."""
    k = rng.randint(1, max_facets or max(3, n))
    facets = []
    for _ in range(k):
        size = rng.randint(1, n)
        facets.append(rng.sample(range(1, n + 1), size))
    return complex_from_facets(n, facets)


def random_cover_complex(rng, n: int, max_facets: int | None = None) -> SimplicialComplex:
    """A random complex on [n] in which every singleton is a face."""
    c = random_complex(rng, n, max_facets)
    missing = [v for v in range(1, n + 1) if v not in c.support]
    if not missing:
        return c
    return complex_from_facets(n, [list(f.elements) for f in c.facets] + [[v] for v in missing])


def random_graph(rng, n: int, p: float) -> LabeledGraph:
    edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return LabeledGraph(n, edges)


def cycle_graph(n: int) -> LabeledGraph:
    edges = sorted(tuple(sorted((i, (i + 1) % n))) for i in range(n))
    return LabeledGraph(n, tuple(edges))


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, tuple(combinations(range(n), 2)))


def downset_universe_count(n: int) -> int:
    """Count downward-closed families on [n] containing every singleton.

    Independent oracle for the labeled universe size: iterate all subsets of
    the non-singleton nonempty subsets and test closure directly. n <= 4.
    """
    assert n <= 4
    full = (1 << n) - 1
    non_singletons = [m for m in range(1, full + 1) if m.bit_count() >= 2]
    count = 0
    for pick in range(1 << len(non_singletons)):
        fam = {non_singletons[i] for i in range(len(non_singletons)) if pick >> i & 1}
        closed = True
        for m in fam:
            sub = (m - 1) & m
            while sub and closed:
                if sub.bit_count() >= 2 and sub not in fam:
                    closed = False
                sub = (sub - 1) & m
            if not closed:
                break
        if closed:
            count += 1
    return count


@functools.lru_cache(maxsize=None)
def universe(n: int, up_to_iso: bool = True):
    return tuple(enumerate_complexes(n, up_to_iso))


@functools.lru_cache(maxsize=None)
def universe_through(n_max: int, up_to_iso: bool = True):
    out = []
    for n in range(1, n_max + 1):
        out.extend(universe(n, up_to_iso))
    return tuple(out)
