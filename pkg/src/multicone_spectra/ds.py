"""Cospectral-mate search, spectral-determination reports and censuses.

Every comparison is exact equality of integer polynomial coefficients.
Candidates are first restricted by invariants that the polynomial itself
fixes, so the filters can never drop a mate:

* adjacency: ``m = -c[n-2]`` and ``triangles = -c[n-3] / 2``;
* Laplacian and signless Laplacian: ``2m = -c[n-1]`` and
  ``sum(d^2) = (2m)^2 - 2 c[n-2] - 2m`` (from the trace of the square).
"""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .canon import canonical_form, canonical_graph
from .enumerate import EnumerationSpec, enumerate_graphs
from .errors import CapacityError, PreconditionError
from .graph import Graph, degree_profile, multicone
from .graph6 import encode_graph6
from .poly import IntPoly
from .spectra import KINDS, char_poly

log = logging.getLogger(__name__)

MAX_SEARCH_ORDER = 10
MAX_CENSUS_ORDER = 9


@dataclass
class DSReport:
    target: str
    kind: str
    order: int
    connected_only: bool
    enumerated: int
    mates: list[str]
    verdict: str
    seconds: float | None
    family: tuple[int, int, int] | None = None
    degree_check: bool | None = None
    disconnected_mates: list[str] = field(default_factory=list)

    @property
    def determined(self) -> bool:
        return self.verdict == "determined"

    def to_json(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d["seconds"] = None
        if self.family is not None:
            d["family"] = list(self.family)
        return d


@dataclass
class CospectralClass:
    polynomial: IntPoly
    members: list[str]

    def to_json(self) -> dict:
        return {"polynomial": self.polynomial.to_json(), "members": self.members}


@dataclass
class CensusReport:
    order: int
    kind: str
    graphs: int
    class_count: int
    nontrivial: list[CospectralClass]
    not_determined: Fraction

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "kind": self.kind,
            "graphs": self.graphs,
            "class_count": self.class_count,
            "nontrivial": [c.to_json() for c in self.nontrivial],
            "not_determined": str(self.not_determined),
            "not_determined_fraction": float(self.not_determined),
        }


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise PreconditionError(f"unknown matrix kind {kind!r}")


def _prefilter(target: IntPoly, n: int, kind: str):
    """Edge count and a cheap per-graph predicate implied by ``target``."""
    c = target.coeff
    if kind == "adjacency":
        m = -c(n - 2) if n >= 2 else 0
        if n >= 3:
            if c(n - 3) % 2:
                return m, lambda g: False
            tri = -c(n - 3) // 2
            return m, lambda g: g.triangle_count() == tri
        return m, None
    two_m = -c(n - 1)
    if two_m % 2:
        return -1, None
    m = two_m // 2
    if n < 2:
        return m, None
    sq = two_m * two_m - 2 * c(n - 2) - two_m
    return m, lambda g: sum(d * d for d in g.degrees()) == sq


def find_cospectral_mates(
    target: IntPoly, n: int, kind: str = "adjacency", connected_only: bool = False,
    prefilter: bool = True,
) -> tuple[list[Graph], int]:
    """All graphs of order ``n`` (one per isomorphism class) whose
    ``kind`` polynomial equals ``target``, plus the number of graphs the
    enumeration produced. Graphs come back canonically labelled, sorted by
    graph6."""
    _check_kind(kind)
    if target.degree != n or not target.is_monic():
        raise PreconditionError("target must be monic of degree n")
    if n > MAX_SEARCH_ORDER:
        raise CapacityError(f"search order {n} exceeds {MAX_SEARCH_ORDER}")
    if prefilter:
        m, pred = _prefilter(target, n, kind)
        if m < 0 or m > n * (n - 1) // 2:
            return [], 0
        stream = enumerate_graphs(EnumerationSpec(n, connected_only=connected_only, edges=m))
    else:
        pred = None
        stream = enumerate_graphs(EnumerationSpec(n, connected_only=connected_only))
    found = []
    count = 0
    for g in stream:
        count += 1
        if pred is not None and not pred(g):
            continue
        if char_poly(g, kind) == target:
            found.append(canonical_graph(g))
    found.sort(key=encode_graph6)
    return found, count


def verify_ds(g: Graph, kind: str = "adjacency", connected_only: bool = False) -> DSReport:
    """Is ``g`` determined by its ``kind`` spectrum among graphs of its order
    (restricted to connected graphs when asked)? The polynomial degree fixes
    the order, so searching one order is complete."""
    _check_kind(kind)
    if g.n > MAX_SEARCH_ORDER:
        raise CapacityError(f"order {g.n} exceeds search capacity {MAX_SEARCH_ORDER}")
    t0 = time.perf_counter()
    target = char_poly(g, kind)
    found, count = find_cospectral_mates(target, g.n, kind, connected_only)
    key = canonical_form(g)
    mates = [encode_graph6(h) for h in found if canonical_form(h) != key]
    report = DSReport(
        target=encode_graph6(canonical_graph(g)),
        kind=kind,
        order=g.n,
        connected_only=connected_only,
        enumerated=count,
        mates=mates,
        verdict="determined" if not mates else "not-determined",
        seconds=round(time.perf_counter() - t0, 3),
    )
    log.info("verify_ds %s %s: %s (%d candidates)", report.target, kind, report.verdict, count)
    return report


def cospectral_census(n: int, kind: str = "adjacency") -> CensusReport:
    """Group every graph of order ``n`` by its exact polynomial."""
    _check_kind(kind)
    if n > MAX_CENSUS_ORDER:
        raise CapacityError(f"census order {n} exceeds {MAX_CENSUS_ORDER}")
    classes: dict[IntPoly, list[Graph]] = {}
    total = 0
    for g in enumerate_graphs(EnumerationSpec(n)):
        total += 1
        classes.setdefault(char_poly(g, kind), []).append(g)
    nontrivial = []
    in_nontrivial = 0
    for poly, members in classes.items():
        if len(members) > 1:
            in_nontrivial += len(members)
            codes = sorted(encode_graph6(canonical_graph(h)) for h in members)
            nontrivial.append(CospectralClass(poly, codes))
    nontrivial.sort(key=lambda c: c.members)
    return CensusReport(
        order=n,
        kind=kind,
        graphs=total,
        class_count=len(classes),
        nontrivial=nontrivial,
        not_determined=Fraction(in_nontrivial, total) if total else Fraction(0),
    )


def multicone_degree_check(r: int, s: int, t: int) -> bool:
    """Minimum degree ``r+t-1``; complete when s = 1, otherwise bidegreed with
    ``r`` vertices of degree ``r+st-1`` and ``st`` of degree ``r+t-1``."""
    prof = degree_profile(multicone(r, s, t))
    if prof.min_degree != r + t - 1:
        return False
    if s == 1:
        return prof.regular and prof.max_degree == r + t - 1
    expected = (r + s * t - 1,) * r + (r + t - 1,) * (s * t)
    return prof.biregular and prof.degrees == expected


def multicone_params(order_cap: int, r_max: int | None = None, s_max: int | None = None,
                     t_max: int | None = None) -> list[tuple[int, int, int]]:
    out = []
    for r in range(1, (r_max or order_cap) + 1):
        for s in range(1, (s_max or order_cap) + 1):
            for t in range(1, (t_max or order_cap) + 1):
                if r + s * t <= order_cap:
                    out.append((r, s, t))
    return out


def verify_multicone_family(
    r_max: int | None, s_max: int | None, t_max: int | None, order_cap: int,
    kind: str = "adjacency", record_disconnected: bool = True,
) -> list[DSReport]:
    """Run :func:`verify_ds` on every ``K_r v sK_t`` with ``r+st <= order_cap``.

    Adjacency searches are over connected graphs; any disconnected mates
    found by an extra unrestricted search are recorded separately and do not
    affect the verdict. Laplacian and signless searches are unrestricted.
    """
    _check_kind(kind)
    if order_cap > MAX_SEARCH_ORDER:
        raise CapacityError(f"order cap {order_cap} exceeds {MAX_SEARCH_ORDER}")
    reports = []
    for r, s, t in multicone_params(order_cap, r_max, s_max, t_max):
        g = multicone(r, s, t)
        connected_only = kind == "adjacency"
        rep = verify_ds(g, kind, connected_only)
        rep.family = (r, s, t)
        rep.degree_check = multicone_degree_check(r, s, t)
        if connected_only and record_disconnected:
            wide = verify_ds(g, kind, connected_only=False)
            rep.disconnected_mates = [
                code for code in wide.mates if code not in rep.mates
            ]
        reports.append(rep)
    return reports

