from __future__ import annotations

import itertools
from collections import defaultdict

import pytest

from multicone_spectra.canon import (
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    canonical_labelling,
    is_isomorphic,
)
from multicone_spectra.enumerate import EnumerationSpec, children, enumerate_graphs
from multicone_spectra.errors import CapacityError, PreconditionError
from multicone_spectra.graph import (
    Graph,
    all_labeled_graphs,
    complete,
    complete_multipartite,
    copies,
    cycle,
    disjoint_union,
    empty,
    friendship,
    is_connected,
    multicone,
    path,
)
from multicone_spectra.graph6 import encode_graph6
from multicone_spectra.spectra import char_poly
from oracles import brute_isomorphic, polya_graph_counts, random_graph

# Counts of unlabelled graphs, frozen from the labelled-enumeration oracle
# (n <= 6, re-derived live below) and the Polya oracle (all n).
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

TEST_GRAPHS = [
    cycle(4), cycle(9), path(6), complete(5), empty(6), friendship(3),
    multicone(2, 3, 2), complete_multipartite([2, 3, 3]), copies(5, complete(2)),
    disjoint_union(cycle(4), complete(1)), complete_multipartite([1, 4]),
    # Petersen graph: vertex-transitive with a large automorphism group
    Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                     + [(i, i + 5) for i in range(5)]),
]


def test_c4_all_labelings():
    g = cycle(4)
    forms = {canonical_form(g.relabel(p)) for p in itertools.permutations(range(4))}
    assert len(forms) == 1


@pytest.mark.parametrize("g", TEST_GRAPHS, ids=lambda g: encode_graph6(g))
def test_canonical_form_invariance(g, rng):
    base = canonical_form(g)
    perm = list(range(g.n))
    for _ in range(100):
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == base


def test_fig3_pair_distinguished():
    a = disjoint_union(cycle(4), complete(1))
    b = complete_multipartite([1, 4])
    assert canonical_form(a) != canonical_form(b)
    assert not is_isomorphic(a, b)


def test_complement_involution_canonical():
    g = complete(3)
    assert canonical_form(g) == canonical_form(g.complement().complement())


def test_is_isomorphic_examples():
    assert is_isomorphic(friendship(2), multicone(1, 2, 2))
    assert is_isomorphic(complete_multipartite([2, 3]), complete_multipartite([3, 2]))
    assert not is_isomorphic(complete(3), complete(4))


def test_canonical_graph_is_a_relabelling():
    g = multicone(2, 3, 2)
    h = canonical_graph(g)
    assert brute_isomorphic(g, h) or g.n > 7
    assert canonical_form(h) == canonical_form(g)
    lab = canonical_labelling(g)
    assert sorted(lab.perm) == list(range(g.n))
    assert g.relabel(lab.perm) == h


def test_generators_are_automorphisms():
    for g in TEST_GRAPHS:
        for gen in canonical_labelling(g).generators:
            assert g.relabel(gen) == g


def test_automorphism_orbits():
    orb = automorphism_orbits(friendship(3))
    assert len({orb[v] for v in range(1, 7)}) == 1 and orb[0] != orb[1]
    petersen = TEST_GRAPHS[-1]
    assert len(set(automorphism_orbits(petersen))) == 1
    assert len(set(automorphism_orbits(path(5)))) == 3


@pytest.mark.parametrize("seed_offset", range(20))
def test_random_pairs_agree_with_brute_force(seed_offset, rng):
    for _ in range(seed_offset + 1):
        rng.random()
    n = rng.randint(2, 6)
    g = random_graph(rng, n)
    h = g.relabel(rng.sample(range(n), n)) if rng.random() < 0.5 else random_graph(rng, n)
    assert is_isomorphic(g, h) == brute_isomorphic(g, h)


@pytest.mark.parametrize("n", range(1, 7))
def test_labelled_oracle_matches_enumeration(n):
    oracle = {canonical_form(g) for g in all_labeled_graphs(n)}
    stream = [canonical_form(g) for g in enumerate_graphs(EnumerationSpec(n))]
    assert len(stream) == len(set(stream)) == GRAPH_COUNTS[n]
    assert set(stream) == oracle


@pytest.mark.parametrize("n", range(1, 7))
def test_labelled_oracle_connected(n):
    oracle = {canonical_form(g) for g in all_labeled_graphs(n) if is_connected(g)}
    stream = {canonical_form(g) for g in enumerate_graphs(EnumerationSpec(n, connected_only=True))}
    assert stream == oracle and len(stream) == CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_polya_counts(n):
    assert sum(polya_graph_counts(n)) == GRAPH_COUNTS[n]
    per_edge = [0] * (n * (n - 1) // 2 + 1)
    for g in enumerate_graphs(EnumerationSpec(n)):
        per_edge[g.m] += 1
    assert per_edge == polya_graph_counts(n)


def test_order7_pairwise_nonisomorphic():
    """Completeness at order 7 follows from the Polya count plus pairwise
    non-isomorphism, checked by brute force inside invariant buckets."""
    buckets = defaultdict(list)
    for g in enumerate_graphs(EnumerationSpec(7)):
        key = (tuple(sorted(g.degrees())), char_poly(g), char_poly(g, "laplacian"))
        buckets[key].append(g)
    for members in buckets.values():
        for a, b in itertools.combinations(members, 2):
            assert not brute_isomorphic(a, b)


@pytest.mark.parametrize("n", [8, 9])
def test_edge_slices_match_polya(n):
    counts = polya_graph_counts(n)
    for m in range(0, n * (n - 1) // 2 + 1, 3):
        got = sum(1 for _ in enumerate_graphs(EnumerationSpec(n, edges=m)))
        assert got == counts[m], m


def test_connected_order8():
    assert sum(1 for _ in enumerate_graphs(EnumerationSpec(8, connected_only=True))) == 11117


def test_degree_filters():
    spec = EnumerationSpec(6, min_degree=2, max_degree=3)
    got = list(enumerate_graphs(spec))
    assert got and all(2 <= d <= 3 for g in got for d in g.degrees())
    expected = [g for g in enumerate_graphs(EnumerationSpec(6))
                if 2 <= min(g.degrees()) and max(g.degrees()) <= 3]
    assert len(got) == len(expected)


def test_enumeration_limits():
    with pytest.raises(CapacityError):
        enumerate_graphs(EnumerationSpec(11))
    with pytest.raises(PreconditionError):
        enumerate_graphs(EnumerationSpec(0))
    assert list(enumerate_graphs(EnumerationSpec(4, edges=7))) == []


def test_each_child_has_one_parent():
    kids = [rows for parent in ((0, 0), (0b10, 0b01)) for rows in children(parent)]
    forms = [canonical_form(Graph(3, rows)) for rows in kids]
    assert len(forms) == len(set(forms)) == 4
    # K3 is the only child of K2: the other extensions give the new vertex
    # less than maximum degree
    assert [Graph(3, r) for r in children((0b10, 0b01))] == [complete(3)]


def test_worker_count_independent():
    serial = [g.rows for g in enumerate_graphs(EnumerationSpec(8, edges=9), workers=1)]
    parallel = [g.rows for g in enumerate_graphs(EnumerationSpec(8, edges=10), workers=2)]
    serial10 = [g.rows for g in enumerate_graphs(EnumerationSpec(8, edges=10), workers=1)]
    assert parallel == serial10
    assert len(serial) == polya_graph_counts(8)[9]
