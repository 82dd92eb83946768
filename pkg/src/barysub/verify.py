"""Exhaustive desk-scale verification of the rigidity and equivalence theorems.

The universe for size n is every complex on ground set [n] in which all n
singletons are faces, i.e. every facet antichain covering [n]. Over that
universe the harnesses check, pair by pair, that the comparability graph
(equivalently the subdivision) determines the complex, and that the chain
of equivalent conditions (duals, complements, subdivisions, iterated
subdivisions, comparability graphs, generator sets) holds or fails in
lockstep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
import random

from .core import (
    SimplicialComplex,
    VertexSet,
    are_isomorphic,
    canonical_form,
    complex_from_facets,
    relabel_complex,
)
from .derived import (
    alexander_dual,
    barycentric_subdivision,
    complement_complex,
    facet_ideal_generators,
    stanley_reisner_generators,
)
from .errors import EmptyInput, GroundSetTooLarge, UniverseTooLarge
from .graphs import LabeledGraph, clique_complex, comparability_graph
from .reconstruct import reconstruct_from_comparability_graph

MAX_UNIVERSE_GROUND = 6


@dataclass
class VerificationReport:
    """Counts and counterexample log of one verification run.

    ``failures`` empty means every checked biconditional held; ``notes``
    documents method substitutions and skipped checks.
    """

    universe_size: int
    pair_checks: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _mask_sort_key(m: int) -> tuple[int, int]:
    return (m.bit_count(), m)


def enumerate_complexes(n: int, up_to_iso: bool = False) -> list[SimplicialComplex]:
    """All complexes on [n] whose faces include every singleton.

    Enumerated as antichains of nonempty subsets covering [n], by DFS over
    subsets in (cardinality, value) order with a suffix-union prune. With
    ``up_to_iso`` the list keeps one representative per canonical form.
    Counts up to isomorphism: 1, 2, 5, 20, 180 for n = 1..5.
    """
    if n < 1:
        raise EmptyInput("universe needs a nonempty ground set")
    if n > MAX_UNIVERSE_GROUND:
        raise UniverseTooLarge(f"universe capped at {MAX_UNIVERSE_GROUND} vertices")
    full = (1 << n) - 1
    subsets = sorted(range(1, full + 1), key=_mask_sort_key)
    total = len(subsets)
    suffix = [0] * (total + 1)
    for i in range(total - 1, -1, -1):
        suffix[i] = suffix[i + 1] | subsets[i]

    families: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def walk(i: int, union: int) -> None:
        if union | suffix[i] != full:
            return
        if i == total:
            families.append(tuple(chosen))
            return
        walk(i + 1, union)
        c = subsets[i]
        for m in chosen:
            if m & c == m or m & c == c:
                return
        chosen.append(c)
        walk(i + 1, union | c)
        chosen.pop()

    walk(0, 0)

    out: list[SimplicialComplex] = []
    seen: set = set()
    for fam in sorted(families, key=lambda f: (len(f), tuple(_mask_sort_key(m) for m in f))):
        cx = complex_from_facets(n, [VertexSet.from_mask(m) for m in fam])
        if up_to_iso:
            key = canonical_form(cx).sort_key
            if key in seen:
                continue
            seen.add(key)
        out.append(cx)
    return out


def graph_canonical_form(g: LabeledGraph):
    """Canonical form of a graph: the complex machinery applied to its clique complex.

    Two graphs are isomorphic exactly when these forms are equal, because
    the clique complex determines the graph (its 1-skeleton) and is built
    invariantly.
    """
    return canonical_form(clique_complex(g))


def _graph_invariant(g: LabeledGraph) -> tuple:
    # Cheap prescreen: vertex count plus sorted degree sequence.
    deg = [0] * g.vertex_count
    for i, j in g.edges:
        deg[i] += 1
        deg[j] += 1
    return (g.vertex_count, len(g.edges), tuple(sorted(deg)))


def graphs_isomorphic(a: LabeledGraph, b: LabeledGraph) -> bool:
    if _graph_invariant(a) != _graph_invariant(b):
        return False
    return graph_canonical_form(a) == graph_canonical_form(b)


def verify_subdivision_rigidity(n: int) -> VerificationReport:
    """Check that the comparability graph determines the complex, for all of [n].

    Over the up-to-isomorphism universe: distinct members must have
    non-isomorphic comparability graphs, every member must survive the
    reconstruction round trip, and a relabeled copy must keep an isomorphic
    graph (the positive direction of the biconditional).
    """
    if n > 5:
        raise UniverseTooLarge("rigidity harness capped at 5 vertices")
    universe = enumerate_complexes(n, up_to_iso=True)
    report = VerificationReport(universe_size=len(universe), pair_checks=0)
    report.notes.append(
        "graph isomorphism = canonical form of the clique complex, "
        "after a degree-sequence prescreen"
    )
    report.notes.append(
        "pair checks = distinct unordered graph pairs + one reconstruction "
        "and one relabeled-copy graph comparison per universe member"
    )
    rng = random.Random(20260816 + n)
    graphs = [comparability_graph(cx) for cx in universe]
    forms = [graph_canonical_form(g) for g in graphs]
    for i, j in combinations(range(len(universe)), 2):
        report.pair_checks += 1
        if forms[i] == forms[j]:
            report.failures.append(
                f"universe[{i}] and universe[{j}] are non-isomorphic but their "
                f"comparability graphs share a canonical form"
            )
    for i, cx in enumerate(universe):
        report.pair_checks += 1
        rec = reconstruct_from_comparability_graph(graphs[i])
        if rec.status != "ok" or rec.complex is None or are_isomorphic(rec.complex, cx) is None:
            report.failures.append(
                f"universe[{i}] failed the reconstruction round trip "
                f"(status {rec.status})"
            )
        report.pair_checks += 1
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        copy = relabel_complex(cx, tuple(perm))
        if graph_canonical_form(comparability_graph(copy)) != forms[i]:
            report.failures.append(
                f"universe[{i}] relabeled by {perm} changed its graph's canonical form"
            )
    return report


def _equivalence_bundle(cx: SimplicialComplex):
    """Canonical forms of all the equivalence-item transforms of one complex."""
    sub, _ = barycentric_subdivision(cx)
    try:
        sub2, _ = barycentric_subdivision(sub)
        form_sub2 = canonical_form(sub2).sort_key
    except GroundSetTooLarge:
        form_sub2 = None
    return {
        "complex": canonical_form(cx).sort_key,
        "dual": canonical_form(alexander_dual(cx)).sort_key,
        "complement": canonical_form(complement_complex(cx)).sort_key,
        "subdivision": canonical_form(sub).sort_key,
        "subdivision2": form_sub2,
        "graph": canonical_form(clique_complex(comparability_graph(cx))).sort_key,
    }


_ITEM_NAMES = ("dual", "complement", "subdivision", "subdivision2", "graph")


def verify_equivalences(n: int) -> VerificationReport:
    """Check that all equivalence items answer alike on every universe pair.

    Items checked per pair: complex isomorphism, dual isomorphism,
    complement isomorphism, subdivision isomorphism, twice-iterated
    subdivision isomorphism (skipped with a note where the 64-element cap
    blocks the second subdivision), comparability-graph isomorphism. The
    generator-set items are certified by their reduction to complex
    isomorphism: for isomorphic pairs the witness bijection must carry
    minimal nonfaces onto minimal nonfaces and facets onto facets.
    """
    if n > 4:
        raise UniverseTooLarge("equivalence harness capped at 4 vertices")
    universe = enumerate_complexes(n, up_to_iso=True)
    report = VerificationReport(universe_size=len(universe), pair_checks=0)
    report.notes.append(
        "generator-set items are checked by transporting Stanley-Reisner and "
        "facet generators along the isomorphism witness, standing in for "
        "isomorphism of the generated algebras"
    )
    bundles = [_equivalence_bundle(cx) for cx in universe]
    skipped = sum(1 for b in bundles if b["subdivision2"] is None)
    if skipped:
        report.notes.append(
            f"{skipped} universe members exceed the 64-element cap at the second "
            f"subdivision; the iterated-subdivision item is skipped for their pairs"
        )
    for i, j in combinations(range(len(universe)), 2):
        report.pair_checks += 1
        bi, bj = bundles[i], bundles[j]
        expected = bi["complex"] == bj["complex"]  # always False in this universe
        for item in _ITEM_NAMES:
            if bi[item] is None or bj[item] is None:
                continue
            if (bi[item] == bj[item]) != expected:
                report.failures.append(
                    f"pair ({i},{j}): item {item} answers "
                    f"{bi[item] == bj[item]} but complex isomorphism is {expected}"
                )
    rng = random.Random(8160000 + n)
    for i, cx in enumerate(universe):
        for _ in range(2):
            report.pair_checks += 1
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            copy = relabel_complex(cx, tuple(perm))
            bc = _equivalence_bundle(copy)
            bi = bundles[i]
            for item in _ITEM_NAMES:
                if bi[item] is None or bc[item] is None:
                    continue
                if bi[item] != bc[item]:
                    report.failures.append(
                        f"universe[{i}] relabeled by {perm}: item {item} broke"
                    )
            witness = are_isomorphic(cx, copy)
            if witness is None:
                report.failures.append(
                    f"universe[{i}] relabeled by {perm}: no isomorphism witness"
                )
                continue
            srs = {witness.apply(s) for s in stanley_reisner_generators(cx)}
            if srs != set(stanley_reisner_generators(copy)):
                report.failures.append(
                    f"universe[{i}] relabeled by {perm}: Stanley-Reisner "
                    f"generators not carried onto generators"
                )
            fgs = {witness.apply(s) for s in facet_ideal_generators(cx)}
            if fgs != set(facet_ideal_generators(copy)):
                report.failures.append(
                    f"universe[{i}] relabeled by {perm}: facet generators "
                    f"not carried onto generators"
                )
    return report
