"""Simple undirected graphs stored as adjacency bit rows.

Row ``i`` is an int whose bit ``j`` is set when vertices ``i`` and ``j`` are
adjacent. With at most 64 vertices each row fits a machine word, which keeps
the enumeration and refinement loops cheap.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, PreconditionError

MAX_ORDER = 64

INFINITE_DIAMETER = math.inf


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise PreconditionError("graph order must be at least 1")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
        if len(rows) != n:
            raise PreconditionError("row count does not match order")
        rows = tuple(int(r) for r in rows)
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full or (r >> i) & 1:
                raise PreconditionError(f"row {i} has loop or out-of-range bits")
            for j in _bits(r):
                if not (rows[j] >> i) & 1:
                    raise PreconditionError("adjacency is not symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((n, rows)))

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee symmetry and zero diagonal
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_hash", hash((n, rows)))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        return cls(n, [sum(1 << j for j in range(n) if a[i, j]) for i in range(n)])

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if j > i]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def matrix(self, kind: str = "adjacency", dtype=np.int64) -> np.ndarray:
        """Adjacency, Laplacian ``D - A`` or signless Laplacian ``D + A``."""
        a = self.adjacency_matrix(dtype)
        if kind == "adjacency":
            return a
        d = np.diag(np.array(self.degrees(), dtype=dtype))
        if kind == "laplacian":
            return d - a
        if kind == "signless":
            return d + a
        raise PreconditionError(f"unknown matrix kind {kind!r}")

    def triangle_count(self) -> int:
        rows = self.rows
        total = 0
        for u, v in self.edges():
            total += (rows[u] & rows[v]).bit_count()
        return total // 3

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(
            self.n, tuple((~r & full) & ~(1 << i) for i, r in enumerate(self.rows))
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``perm[i]`` becomes vertex ``i``."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            r = 0
            for w in _bits(self.rows[v]):
                r |= 1 << pos[w]
            rows[i] = r
        return Graph._trusted(self.n, tuple(rows))

    def delete_vertex(self, j: int) -> "Graph":
        if self.n == 1:
            raise PreconditionError("cannot delete the only vertex")
        keep = [v for v in range(self.n) if v != j]
        return self.induced(keep)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for w in _bits(self.rows[v]):
                if w in pos:
                    r |= 1 << pos[w]
            rows.append(r)
        return Graph._trusted(len(vertices), tuple(rows))


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- constructions ---------------------------------------------------------


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << i) for i in range(n)))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise PreconditionError("part sizes must be positive")
    g = empty(parts[0])
    for p in parts[1:]:
        g = join(g, empty(p))
    return g


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    _check_order(n)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph._trusted(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_order(n)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [r | h_mask for r in g.rows] + [(r << g.n) | g_mask for r in h.rows]
    return Graph._trusted(n, tuple(rows))


def copies(k: int, g: Graph) -> Graph:
    if k < 1:
        raise PreconditionError("copy count must be at least 1")
    return disjoint_union(*([g] * k))


def multicone(r: int, s: int, t: int) -> Graph:
    """K_r joined with s disjoint copies of K_t."""
    if min(r, s, t) < 1:
        raise PreconditionError("multicone parameters must be at least 1")
    return join(complete(r), copies(s, complete(t)))


def friendship(s: int) -> Graph:
    return multicone(1, s, 2)


# -- structural summaries --------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    regular: bool
    biregular: bool


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(sorted(g.degrees(), reverse=True))
    lo, hi = degs[-1], degs[0]
    return DegreeProfile(
        degrees=degs,
        min_degree=lo,
        max_degree=hi,
        regular=lo == hi,
        biregular=len(set(degs)) == 2 and lo > 0,
    )


@dataclass(frozen=True)
class StructuralProbe:
    connected: bool
    bipartite: bool
    diameter: float
    is_join: bool
    complete_multipartite_plus_isolated: bool
    part_sizes: tuple[int, ...] | None
    isolated: int


def components(g: Graph) -> list[int]:
    """Vertex bitmask of each connected component."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    comp = 1
    frontier = 1
    rows = g.rows
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~comp
        comp |= nxt
    return comp == full


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in _bits(g.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def eccentricities(g: Graph) -> list[float]:
    out = []
    for s in range(g.n):
        dist = 0
        reached = 1 << s
        frontier = reached
        while True:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~reached
            if not frontier:
                break
            reached |= frontier
            dist += 1
        out.append(dist if reached.bit_count() == g.n else INFINITE_DIAMETER)
    return out


def diameter(g: Graph) -> float:
    return max(eccentricities(g))


def multipartite_parts(g: Graph) -> tuple[tuple[int, ...], int] | None:
    """Part sizes and isolated-vertex count if ``g`` is complete multipartite
    (with at least one edge) plus isolated vertices, otherwise ``None``."""
    active = [v for v in range(g.n) if g.rows[v]]
    if not active:
        return None
    active_mask = sum(1 << v for v in active)
    parts: list[int] = []
    assigned = 0
    for v in active:
        if (assigned >> v) & 1:
            continue
        # v's part: v plus every active non-neighbour
        part = (active_mask & ~g.rows[v])
        for u in _bits(part):
            # non-adjacency must be an equivalence relation on the active set
            if (active_mask & ~g.rows[u]) != part:
                return None
        assigned |= part
        parts.append(part.bit_count())
    return tuple(sorted(parts, reverse=True)), g.n - len(active)


def structural_probe(g: Graph) -> StructuralProbe:
    connected = is_connected(g)
    mp = multipartite_parts(g)
    return StructuralProbe(
        connected=connected,
        bipartite=is_bipartite(g),
        diameter=diameter(g),
        is_join=g.n >= 2 and not is_connected(g.complement()),
        complete_multipartite_plus_isolated=mp is not None,
        part_sizes=mp[0] if mp else None,
        isolated=mp[1] if mp else sum(1 for r in g.rows if not r),
    )


def is_complete_bipartite(g: Graph) -> bool:
    mp = multipartite_parts(g)
    return mp is not None and mp[1] == 0 and len(mp[0]) == 2


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_labeled_graphs(n: int):
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (mask >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph._trusted(n, tuple(rows))
