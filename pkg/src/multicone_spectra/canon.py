"""Canonical labelling by equitable refinement and individualisation.

The search tree is the usual one: refine the degree partition to an
equitable ordered partition, individualise a vertex of the first smallest
non-trivial cell, refine again, and recurse until the partition is discrete.
Each leaf gives a labelling; the canonical form is the lexicographically
least upper-triangle bit string over all leaves.

Two pruning rules keep highly symmetric inputs (empty graphs, cliques,
multicones) from blowing up the tree:

* twins (vertices with equal neighbourhoods apart from each other) are
  interchangeable, so only one per twin class is tried in a cell;
* automorphisms discovered from equal leaves prune children lying in the
  same orbit of the pointwise stabiliser of the current prefix.

Automorphisms found this way, together with the twin transpositions,
generate the full automorphism group, so orbits come for free.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .graph import Graph


class Labelling(NamedTuple):
    perm: tuple[int, ...]
    certificate: int
    generators: tuple[tuple[int, ...], ...]


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Split fragments are ordered by ascending neighbour count, so the result
    depends only on the partition structure, never on vertex names.
    """
    cells = [c for c in cells]
    stable = False
    while not stable:
        stable = True
        w = 0
        while w < len(cells):
            wmask = _mask(cells[w])
            out = []
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                counts = [(rows[v] & wmask).bit_count() for v in c]
                lo = min(counts)
                if lo == max(counts):
                    out.append(c)
                    continue
                stable = False
                groups: dict[int, list[int]] = {}
                for v, k in zip(c, counts):
                    groups.setdefault(k, []).append(v)
                out.extend(groups[k] for k in sorted(groups))
            cells = out
            w += 1
    return cells


def degree_partition(rows: Sequence[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(rows):
        groups.setdefault(r.bit_count(), []).append(v)
    return [groups[k] for k in sorted(groups)]


def twin_classes(rows: Sequence[int]) -> list[int]:
    """Representative of each vertex's twin class."""
    n = len(rows)
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        ru = rows[u]
        for v in range(u + 1, n):
            if rep[v] == v and (ru & ~(1 << v)) == (rows[v] & ~(1 << u)):
                rep[v] = u
    return rep


def _certificate(rows: Sequence[int], perm: Sequence[int]) -> int:
    cert = 0
    n = len(perm)
    for i in range(n - 1):
        r = rows[perm[i]]
        for j in range(i + 1, n):
            cert = (cert << 1) | ((r >> perm[j]) & 1)
    return cert


def canonical_labelling(g: Graph, cells: list[list[int]] | None = None) -> Labelling:
    """Canonical vertex order, certificate and automorphism group generators.

    ``cells`` may supply an already refined degree partition.
    """
    rows = g.rows
    n = g.n
    twins = twin_classes(rows)
    gens: list[tuple[int, ...]] = []
    for v in range(n):
        if twins[v] != v:
            t = list(range(n))
            t[v], t[twins[v]] = twins[v], v
            gens.append(tuple(t))

    best_cert = -1
    best_perm: tuple[int, ...] = ()
    if cells is None:
        cells = refine(rows, degree_partition(rows))

    def search(cells: list[list[int]], prefix: list[int]):
        nonlocal best_cert, best_perm
        target = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
        if target < 0:
            perm = tuple(c[0] for c in cells)
            cert = _certificate(rows, perm)
            if best_cert < 0 or cert < best_cert:
                best_cert, best_perm = cert, perm
            elif cert == best_cert:
                # best_perm[i] -> perm[i] is an automorphism
                auto = [0] * n
                for a, b in zip(best_perm, perm):
                    auto[a] = b
                gens.append(tuple(auto))
            return
        cell = cells[target]
        done: list[int] = []
        seen_twins: set[int] = set()
        for v in cell:
            if twins[v] in seen_twins:
                continue
            if done:
                stab = [a for a in gens if all(a[p] == p for p in prefix)]
                if stab:
                    orb = orbits(n, stab)
                    if any(orb[u] == orb[v] for u in done):
                        continue
            seen_twins.add(twins[v])
            done.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(refine(rows, child), prefix + [v])

    search(cells, [])
    return Labelling(best_perm, best_cert, tuple(gens))


def canonical_form(g: Graph) -> tuple[int, int]:
    """Label-invariant key ``(order, certificate)``."""
    return g.n, canonical_labelling(g).certificate


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g).perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Smallest vertex of each vertex's orbit under the generated group."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def automorphism_orbits(g: Graph) -> list[int]:
    return orbits(g.n, canonical_labelling(g).generators)
