"""Universe enumeration and the exhaustive desk-scale verification harnesses."""

from itertools import combinations
import random

import pytest

import helpers
from helpers import facet_sets

from barysub import (
    EmptyInput,
    LabeledGraph,
    UniverseTooLarge,
    canonical_form,
    enumerate_complexes,
    full_simplex,
    graph_canonical_form,
    graphs_isomorphic,
    verify_equivalences,
    verify_subdivision_rigidity,
)


def brute_universe_n3() -> set[frozenset[frozenset[int]]]:
    """All facet antichains covering [3], by raw subset iteration."""
    subsets = [frozenset(s) for r in (1, 2, 3) for s in combinations((1, 2, 3), r)]
    out = set()
    for picks in range(1 << len(subsets)):
        fam = [subsets[i] for i in range(len(subsets)) if picks >> i & 1]
        if not fam:
            continue
        if any(a < b for a in fam for b in fam):
            continue
        if frozenset().union(*fam) != {1, 2, 3}:
            continue
        out.add(frozenset(fam))
    return out


def test_labeled_universe_counts():
    for n, want in [(1, 1), (2, 2), (3, 9), (4, 114)]:
        members = enumerate_complexes(n)
        assert len(members) == want
        assert len(members) == helpers.downset_universe_count(n)


def test_labeled_universe_matches_brute_force_n3():
    got = {frozenset(facet_sets(c)) for c in enumerate_complexes(3)}
    assert got == brute_universe_n3()
    assert len(got) == 9


def test_universe_members_are_covering_antichains():
    for n in (1, 2, 3, 4):
        members = enumerate_complexes(n)
        assert len({c.facets for c in members}) == len(members)
        for c in members:
            assert c.ground_size == n
            assert c.has_all_vertices
            assert not c.void


def test_up_to_iso_universe_counts():
    for n, want in [(1, 1), (2, 2), (3, 5), (4, 20), (5, 180)]:
        assert len(helpers.universe(n)) == want


def test_up_to_iso_universe_is_a_transversal():
    for n in (1, 2, 3, 4):
        reps = helpers.universe(n)
        rep_forms = {canonical_form(c).sort_key for c in reps}
        assert len(rep_forms) == len(reps)
        all_forms = {canonical_form(c).sort_key for c in enumerate_complexes(n)}
        assert rep_forms == all_forms


def test_enumerate_bounds():
    with pytest.raises(EmptyInput):
        enumerate_complexes(0)
    with pytest.raises(UniverseTooLarge):
        enumerate_complexes(7)


def test_graph_canonical_form_detects_relabelings():
    rng = random.Random(131)
    for _ in range(40):
        g = helpers.random_graph(rng, rng.randint(1, 8), rng.random())
        form = graph_canonical_form(g)
        perm = list(range(g.vertex_count))
        rng.shuffle(perm)
        edges = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in g.edges))
        assert graph_canonical_form(LabeledGraph(g.vertex_count, edges)) == form


def test_graphs_isomorphic_regular_pairs():
    # same degree sequence, different graphs: the prescreen cannot decide
    c6 = helpers.cycle_graph(6)
    two_triangles = LabeledGraph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)))
    assert not graphs_isomorphic(c6, two_triangles)
    assert graphs_isomorphic(c6, c6)
    shifted = tuple(sorted(tuple(sorted(((i + 2) % 6, (j + 2) % 6))) for i, j in c6.edges))
    assert graphs_isomorphic(c6, LabeledGraph(6, shifted))


def test_graphs_isomorphic_against_permutation_oracle():
    rng = random.Random(137)
    pool = [helpers.random_graph(rng, rng.randint(1, 6), rng.random()) for _ in range(16)]
    pool += [helpers.cycle_graph(3), helpers.cycle_graph(4), helpers.complete_graph(4)]
    checked = 0
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            a, b = pool[i], pool[j]
            assert graphs_isomorphic(a, b) == helpers.graph_brute_iso(a, b), (a, b)
            checked += 1
    assert checked > 150


def test_rigidity_reports_are_clean():
    for n, size, pairs in [(1, 1, 2), (2, 2, 5), (3, 5, 20), (4, 20, 230)]:
        r = verify_subdivision_rigidity(n)
        assert r.universe_size == size
        assert r.pair_checks == pairs
        assert r.failures == []
        assert r.ok


def test_rigidity_full_range():
    r = verify_subdivision_rigidity(5)
    assert r.universe_size == 180
    assert r.pair_checks == 16470
    assert r.ok


def test_rigidity_bound():
    with pytest.raises(UniverseTooLarge):
        verify_subdivision_rigidity(6)


def test_equivalence_reports_are_clean():
    for n, size, pairs in [(1, 1, 2), (2, 2, 5), (3, 5, 20), (4, 20, 230)]:
        r = verify_equivalences(n)
        assert r.universe_size == size
        assert r.pair_checks == pairs
        assert r.failures == []
        assert r.ok


def test_equivalence_skip_note_only_when_cap_binds():
    r3 = verify_equivalences(3)
    assert not any("cap" in note for note in r3.notes)
    r4 = verify_equivalences(4)
    cap_notes = [note for note in r4.notes if "cap" in note]
    assert len(cap_notes) == 1 and cap_notes[0].startswith("2 universe members")


def test_equivalences_bound():
    with pytest.raises(UniverseTooLarge):
        verify_equivalences(5)


def test_reports_are_deterministic():
    assert verify_subdivision_rigidity(3) == verify_subdivision_rigidity(3)
    assert verify_equivalences(3) == verify_equivalences(3)


def test_universe_contains_expected_shapes():
    members = {frozenset(facet_sets(c)) for c in enumerate_complexes(3)}
    assert frozenset({frozenset({1, 2, 3})}) in members  # full simplex
    assert frozenset(
        {frozenset({1}), frozenset({2}), frozenset({3})}
    ) in members  # points
    assert frozenset(
        {frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})}
    ) in members  # triangle boundary
    # deterministic order: fewest facets first, so the full simplex leads
    # and the densest antichain (all pairs for n >= 3) closes the list
    for n in (1, 2, 3, 4):
        assert helpers.universe(n)[0] == full_simplex(n)
    for n in (3, 4):
        last = helpers.universe(n)[-1]
        assert facet_sets(last) == {
            frozenset(p) for p in combinations(range(1, n + 1), 2)
        }
