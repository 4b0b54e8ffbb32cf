"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` or ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import time

import numpy as np
import pytest

from multicone_spectra.canon import canonical_graph, is_isomorphic
from multicone_spectra.ds import cospectral_census, multicone_params, verify_ds, verify_multicone_family
from multicone_spectra.enumerate import EnumerationSpec, enumerate_graphs
from multicone_spectra.graph import (
    complete,
    complete_multipartite,
    copies,
    cycle,
    disjoint_union,
    empty,
    friendship,
    join,
    multicone,
)
from multicone_spectra.graph6 import encode_graph6
from multicone_spectra.poly import power_sums
from multicone_spectra.quadirr import QuadIrr, Spectrum, spectrum_to_poly
from multicone_spectra.spectra import (
    char_poly,
    complement_poly_regular,
    complement_spectrum_regular,
    join_char_poly,
    laplacian_complement_poly,
    laplacian_complement_spectrum,
    multicone_adjacency_spectrum,
    multicone_laplacian_spectrum,
    vertex_deleted_identity_residual,
)
from multicone_spectra.theorems import complement_mate_bipartite, infer_bidegreed_counts, sweep
from oracles import random_connected_graph


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool | None, detail: str, start: float) -> None:
        status = "REPORTED" if ok is None else ("PASS" if ok else "FAIL")
        with capsys.disabled():
            print(f"\ncriterion {number}: {status} ({time.perf_counter() - start:.1f}s) {detail}")
    return emit


def _regular_pool():
    """(name, graph, degree, exact adjacency spectrum or None)."""
    golden = QuadIrr(-1, 1, 5, 2)
    cycle_spectra = {
        3: Spectrum([(2, 1), (-1, 2)]),
        4: Spectrum([(2, 1), (0, 2), (-2, 1)]),
        5: Spectrum([(2, 1), (golden, 2), (golden.conjugate(), 2)]),
        6: Spectrum([(2, 1), (1, 2), (-1, 2), (-2, 1)]),
        7: None,
    }
    pool = []
    for a in range(1, 7):
        spec = Spectrum([(a - 1, 1)] + ([(-1, a - 1)] if a > 1 else []))
        pool.append((f"K{a}", complete(a), a - 1, spec))
    for a in range(3, 8):
        pool.append((f"C{a}", cycle(a), 2, cycle_spectra[a]))
    for a in range(1, 6):
        pool.append((f"{a}K1", empty(a), 0, Spectrum([(0, a)])))
    for a in range(1, 4):
        spec = Spectrum([(a, 1), (-a, 1)] + ([(0, 2 * a - 2)] if a > 1 else []))
        pool.append((f"K{{{a},{a}}}", complete_multipartite([a, a]), a, spec))
    for s in range(1, 9):
        for t in range(1, 9):
            if s * t <= 8:
                spec = Spectrum([(t - 1, s)] + ([(-1, s * (t - 1))] if t > 1 else []))
                pool.append((f"{s}K{t}", copies(s, complete(t)), t - 1, spec))
    return pool


def test_criterion_01_adjacency_closed_form(report):
    start = time.perf_counter()
    params = multicone_params(12)
    bad = [p for p in params
           if spectrum_to_poly(multicone_adjacency_spectrum(*p)) != char_poly(multicone(*p))]
    report(1, not bad, f"{len(params)} families, mismatches {bad}", start)
    assert not bad


def test_criterion_02_laplacian_closed_form(report):
    start = time.perf_counter()
    params = multicone_params(12)
    bad = [p for p in params
           if spectrum_to_poly(multicone_laplacian_spectrum(*p))
           != char_poly(multicone(*p), "laplacian")]
    report(2, not bad, f"{len(params)} families, mismatches {bad}", start)
    assert not bad


def test_criterion_03_join_formula(report):
    start = time.perf_counter()
    pool = [(name, g, r, char_poly(g)) for name, g, r, _ in _regular_pool()]
    pairs = 0
    bad = []
    for na, ga, ra, pa in pool:
        for nb, gb, rb, pb in pool:
            if ga.n + gb.n > 14:
                continue
            pairs += 1
            if join_char_poly(pa, ga.n, ra, pb, gb.n, rb) != char_poly(join(ga, gb)):
                bad.append((na, nb))
    report(3, not bad, f"{pairs} ordered pairs, mismatches {bad}", start)
    assert not bad


def test_criterion_04_complement_transforms(report):
    start = time.perf_counter()
    bad = []
    checked = 0
    for name, g, r, spec in _regular_pool():
        n = g.n
        comp = g.complement()
        p, pc = char_poly(g), char_poly(comp)
        lp, lpc = char_poly(g, "laplacian"), char_poly(comp, "laplacian")
        # polynomial forms hold for every pool graph
        if complement_poly_regular(p, n, r) != pc:
            bad.append((name, "adjacency poly"))
        if complement_poly_regular(pc, n, n - 1 - r) != p:
            bad.append((name, "adjacency poly involution"))
        if laplacian_complement_poly(lp, n) != lpc:
            bad.append((name, "laplacian poly"))
        if laplacian_complement_poly(lpc, n) != lp:
            bad.append((name, "laplacian poly involution"))
        checked += 1
        if spec is None:
            continue
        # spectrum forms where the spectrum is quadratic
        cs = complement_spectrum_regular(spec, n, r)
        if spectrum_to_poly(cs) != pc:
            bad.append((name, "adjacency spectrum"))
        if complement_spectrum_regular(cs, n, n - 1 - r) != spec:
            bad.append((name, "adjacency spectrum involution"))
        lspec = Spectrum([(r - v, 1) for v in spec.values()])
        lcs = laplacian_complement_spectrum(lspec, n)
        if spectrum_to_poly(lcs) != lpc:
            bad.append((name, "laplacian spectrum"))
        if laplacian_complement_spectrum(lcs, n) != lspec:
            bad.append((name, "laplacian spectrum involution"))
    report(4, not bad, f"{checked} pool graphs, failures {bad}", start)
    assert not bad


def _family_report(number: int, kind: str, report) -> None:
    start = time.perf_counter()
    reps = verify_multicone_family(None, None, None, 9, kind)
    undetermined = [r.family for r in reps if not r.determined]
    degree_bad = [r.family for r in reps if not r.degree_check]
    extra = {r.family: r.disconnected_mates for r in reps if r.disconnected_mates}
    detail = f"{len(reps)} families up to order 9, undetermined {undetermined}"
    if extra:
        detail += f"; disconnected mates (informational) {extra}"
    report(number, not undetermined and not degree_bad, detail, start)
    assert not undetermined and not degree_bad


def test_criterion_05_adjacency_determined(report):
    _family_report(5, "adjacency", report)


def test_criterion_06_laplacian_determined(report):
    _family_report(6, "laplacian", report)


def test_criterion_07_smallest_cospectral_pair(report):
    start = time.perf_counter()
    expected = sorted(encode_graph6(canonical_graph(h))
                      for h in (disjoint_union(cycle(4), complete(1)), complete_multipartite([1, 4])))
    small = [cospectral_census(n).nontrivial for n in range(1, 5)]
    five = cospectral_census(5).nontrivial
    ok = all(c == [] for c in small) and [c.members for c in five] == [expected]
    report(7, ok, f"order 5 classes {[c.members for c in five]}", start)
    assert ok


def test_criterion_08_complement_results(report):
    start = time.perf_counter()
    part1 = (complement_mate_bipartite(1, 2) == (1, 4)
             and char_poly(complete_multipartite([1, 4])) == char_poly(friendship(2).complement()))
    part2 = (complement_mate_bipartite(2, 4) == (2, 8)
             and char_poly(complete_multipartite([2, 8]))
             == char_poly(disjoint_union(empty(2), complete_multipartite([4, 4]))))
    params = [p for p in multicone_params(9) if p[1] >= 3]
    undetermined = [p for p in params
                    if not verify_ds(multicone(*p).complement(), "adjacency").determined]
    ok = part1 and part2 and not undetermined
    report(8, ok, f"(i) {part1} (ii) {part2} (iii) {len(params)} complements, "
                  f"undetermined {undetermined}", start)
    assert ok


SWEEP_CRITERION = (
    "one_positive_eigenvalue",
    "regularity",
    "bipartite_coefficients",
    "bipartite_symmetry",
    "bipartite_radius",
    "join_laplacian",
    "radius_bound",
    "radius_bound_equality",
)


def test_criterion_09_theorem_sweeps(report):
    start = time.perf_counter()
    violations: dict[str, list[str]] = {}
    graphs = 0
    for n in range(1, 8):
        res = sweep(n)
        graphs += res.graphs
        for name, codes in res.violations.items():
            violations.setdefault(name, []).extend(codes)
    counted = {k: violations[k] for k in SWEEP_CRITERION if violations[k]}
    info = {k: v for k, v in violations.items() if k not in SWEEP_CRITERION and v}
    detail = f"{graphs} graphs, violations {counted}"
    if info:
        detail += f"; other checks {info}"
    report(9, not counted, detail, start)
    assert not counted


def test_criterion_10_main_angle_identity(report, rng, seed):
    start = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 8))
        xs = [g.n + 1, g.n + 3, 2 * g.n]
        for j in range(g.n):
            worst = max(worst, vertex_deleted_identity_residual(g, j, xs))
    ok = worst < 1e-6
    report(10, ok, f"seed {seed}, worst residual {worst:.3e}", start)
    assert ok


def test_criterion_11_walk_counts(report):
    start = time.perf_counter()
    bad = []
    graphs = 0
    for n in range(1, 8):
        for g in enumerate_graphs(EnumerationSpec(n)):
            graphs += 1
            a = g.adjacency_matrix().astype(np.int64)
            traces = []
            power = np.eye(n, dtype=np.int64)
            for _ in range(8):
                power = power @ a
                traces.append(int(np.trace(power)))
            if power_sums(char_poly(g), 8) != traces:
                bad.append(encode_graph6(g))
    report(11, not bad, f"{graphs} graphs, mismatches {bad[:5]}", start)
    assert not bad


def test_criterion_12_degree_inference(report):
    start = time.perf_counter()
    params = [p for p in multicone_params(12) if p[1] >= 2]
    bad = []
    for r, s, t in params:
        got = infer_bidegreed_counts(char_poly(multicone(r, s, t)), r + s * t - 1, r + t - 1)
        if got != (r, s * t):
            bad.append((r, s, t, got))
    report(12, not bad, f"{len(params)} families, mismatches {bad}", start)
    assert not bad


def test_criterion_13_signless_pair(report):
    start = time.perf_counter()
    bad = []
    for r in range(2, 7):
        a = join(empty(3), complete(r))
        b = join(disjoint_union(complete(3), complete(1)), complete(r - 1))
        if char_poly(a, "signless") != char_poly(b, "signless") or is_isomorphic(a, b):
            bad.append(r)
    report(13, not bad, f"r = 2..6, failures {bad}", start)
    assert not bad


def test_criterion_14_exploratory_signless_census(report):
    start = time.perf_counter()
    lines = []
    for n in range(1, 9):
        c = cospectral_census(n, "signless")
        lines.append(f"n={n}: {c.graphs} graphs, {len(c.nontrivial)} nontrivial classes, "
                     f"fraction not determined {float(c.not_determined):.4f}")
    family = [r.family for r in verify_multicone_family(None, None, None, 8, "signless")
              if not r.determined]
    detail = ("; ".join(lines)
              + f"; multicones up to order 8 with signless mates {family}"
              + "; not reproducible here: the order-33 friendship exception and any"
                " statement over all orders")
    report(14, None, detail, start)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
