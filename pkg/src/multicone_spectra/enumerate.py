"""Isomorph-free generation of all graphs of a given order.

Graphs of order n are grown from the representatives of order n-1 by adding
one vertex joined to a subset ``S`` of the old vertices. A child is emitted
when

1. ``S`` is the smallest bitmask in its orbit under Aut(parent), and
2. the new vertex lies in the automorphism orbit of the vertex that the
   canonical labelling puts last.

Together these give exactly one child per isomorphism class (canonical
augmentation). The canonical-last vertex always sits in the last cell of the
refined degree partition, i.e. it has maximum degree, which lets most
children be rejected before any search.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import canonical_labelling, degree_partition, orbits, refine
from .errors import CapacityError, PreconditionError
from .graph import Graph, is_connected

log = logging.getLogger(__name__)

MAX_ENUMERATION_ORDER = 10
WORKERS_ENV = "MULTICONE_WORKERS"


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    connected_only: bool = False
    edges: int | None = None
    min_degree: int | None = None
    max_degree: int | None = None


def _apply(perm: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def _is_orbit_min(mask: int, gens: tuple[tuple[int, ...], ...]) -> bool:
    seen = {mask}
    stack = [mask]
    while stack:
        cur = stack.pop()
        for g in gens:
            img = _apply(g, cur)
            if img < mask:
                return False
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return True


def _subsets(n: int, size: int | None) -> Iterator[int]:
    if size is None:
        yield from range(1 << n)
        return
    for combo in combinations(range(n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask


def children(parent: tuple[int, ...], edges: int | None = None) -> list[tuple[int, ...]]:
    """Accepted one-vertex extensions of ``parent`` (rows of order n+1).

    ``edges`` restricts the output to children with that edge count.
    """
    n = len(parent)
    new = n
    degs = [r.bit_count() for r in parent]
    max_deg = max(degs) if degs else 0
    eq_mask: dict[int, int] = {}
    for v, d in enumerate(degs):
        eq_mask[d] = eq_mask.get(d, 0) | (1 << v)
    gens = canonical_labelling(Graph._trusted(n, parent)).generators if n > 1 else ()
    size = None
    if edges is not None:
        size = edges - sum(degs) // 2
        if size < 0 or size > n:
            return []
    out = []
    bit_new = 1 << new
    for s in _subsets(n, size):
        k = s.bit_count()
        # the new vertex must end with maximum degree
        if k < max_deg or s & eq_mask.get(k, 0):
            continue
        if gens and not _is_orbit_min(s, gens):
            continue
        rows = [r | bit_new if (s >> i) & 1 else r for i, r in enumerate(parent)]
        rows.append(s)
        cells = refine(rows, degree_partition(rows))
        last = cells[-1]
        if new not in last:
            continue
        if len(last) > 1:
            lab = canonical_labelling(Graph._trusted(n + 1, tuple(rows)), cells)
            orb = orbits(n + 1, lab.generators)
            if orb[lab.perm[-1]] != orb[new]:
                continue
        out.append(tuple(rows))
    return out


@lru_cache(maxsize=None)
def _all_rows(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    out: list[tuple[int, ...]] = []
    for p in _all_rows(n - 1):
        out.extend(children(p))
    return tuple(out)


def _chunk_children(args):
    parents, edges = args
    return [children(p, edges) for p in parents]


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=64)
def _slice_rows(n: int, edges: int, workers: int) -> tuple[tuple[int, ...], ...]:
    parents = _all_rows(n - 1)
    if workers <= 1 or len(parents) < 64:
        out = []
        for p in parents:
            out.extend(children(p, edges))
        return tuple(out)
    # deterministic partition by parent index; merge in parent order
    chunks = [parents[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_chunk_children, [(c, edges) for c in chunks]))
    per_parent: list[list] = [None] * len(parents)  # type: ignore[list-item]
    for w, res in enumerate(results):
        for j, kids in enumerate(res):
            per_parent[w + j * workers] = kids
    return tuple(rows for kids in per_parent for rows in kids)


def _complement_rows(rows: tuple[int, ...]) -> tuple[int, ...]:
    full = (1 << len(rows)) - 1
    return tuple((~r & full) & ~(1 << i) for i, r in enumerate(rows))


def enumerate_graphs(spec: EnumerationSpec, workers: int | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class matching ``spec``.

    Order 10 is only practical with an edge-count filter.
    """
    if spec.n < 1:
        raise PreconditionError("order must be at least 1")
    if spec.n > MAX_ENUMERATION_ORDER:
        raise CapacityError(f"enumeration order {spec.n} exceeds {MAX_ENUMERATION_ORDER}")
    return _stream(spec, _worker_count() if workers is None else workers)


def _stream(spec: EnumerationSpec, workers: int) -> Iterator[Graph]:
    n = spec.n
    t0 = time.perf_counter()
    pairs = n * (n - 1) // 2
    if spec.edges is not None and not 0 <= spec.edges <= pairs:
        return
    if spec.edges is None:
        source = _all_rows(n)
    elif n == 1:
        source = _all_rows(1)
    elif 2 * spec.edges > pairs:
        # dense slices are complements of sparse ones
        source = [_complement_rows(r) for r in _slice_rows(n, pairs - spec.edges, workers)]
    else:
        source = _slice_rows(n, spec.edges, workers)
    count = 0
    for rows in source:
        g = Graph._trusted(n, rows)
        if spec.min_degree is not None or spec.max_degree is not None:
            degs = g.degrees()
            if spec.min_degree is not None and min(degs) < spec.min_degree:
                continue
            if spec.max_degree is not None and max(degs) > spec.max_degree:
                continue
        if spec.connected_only and not is_connected(g):
            continue
        count += 1
        yield g
    dt = time.perf_counter() - t0
    log.info("enumerated %d graphs of order %d in %.2fs (%.0f graphs/s)",
             count, n, dt, count / dt if dt > 0 else float("inf"))
