"""Executable checks of the structural results about spectra used for the
multicone determination arguments."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import isqrt

from .errors import PreconditionError
from .graph import (
    Graph,
    degree_profile,
    diameter,
    is_bipartite,
    is_complete_bipartite,
    is_connected,
    structural_probe,
)
from .poly import IntPoly, count_distinct_roots, count_positive_roots, power_sums
from .quadirr import QuadIrr
from .spectra import DEFAULT_TOL, char_poly, numeric_spectrum


@dataclass(frozen=True)
class BoundReport:
    bound: QuadIrr
    bound_value: float
    rho: float
    equality: bool
    regular: bool
    biregular_with_max_degree: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["bound"] = str(self.bound)
        return d


def spectral_radius_bound(n: int, m: int, delta: int) -> QuadIrr:
    """``(delta - 1 + sqrt(8m - 4n delta + (delta + 1)^2)) / 2``."""
    radicand = 8 * m - 4 * n * delta + (delta + 1) ** 2
    if radicand < 0:
        raise PreconditionError(f"infeasible parameters n={n}, m={m}, delta={delta}")
    return QuadIrr(delta - 1, 1, radicand, 2)


def check_bound(g: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    if not is_connected(g):
        raise PreconditionError("the spectral radius bound is checked on connected graphs")
    prof = degree_profile(g)
    bound = spectral_radius_bound(g.n, g.m, prof.min_degree)
    value = float(bound)
    rho = numeric_spectrum(g, tol=tol)[0]
    if rho > value + tol:
        raise AssertionError(f"spectral radius {rho} exceeds bound {value}")
    return BoundReport(
        bound=bound,
        bound_value=value,
        rho=rho,
        equality=abs(rho - value) < tol,
        regular=prof.regular,
        biregular_with_max_degree=prof.biregular and prof.max_degree == g.n - 1,
    )


def regularity_from_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> bool:
    """Regular iff the spectral radius equals the average degree."""
    rho = numeric_spectrum(g, tol=tol)[0]
    return abs(rho - 2 * g.m / g.n) < tol


@dataclass(frozen=True)
class FlagPair:
    spectral: bool
    structural: bool

    @property
    def agree(self) -> bool:
        return self.spectral == self.structural


def one_positive_eigenvalue_check(g: Graph) -> FlagPair:
    spectral = count_positive_roots(char_poly(g)) == 1
    structural = structural_probe(g).complete_multipartite_plus_isolated
    return FlagPair(spectral, structural)


@dataclass(frozen=True)
class ThreeEigenvalueReport:
    applies: bool
    diameter2: bool | None = None
    theta2_nonneg: bool | None = None
    theta2_zero_iff_complete_bipartite: bool | None = None
    theta1_integral_or_complete_bipartite: bool | None = None
    theta3_value: float | None = None
    eigenvalues: tuple[float, float, float] | None = None


def _distinct(values: list[float], tol: float) -> list[float]:
    out: list[float] = []
    for v in values:
        if not out or abs(out[-1] - v) > 10 * tol:
            out.append(v)
    return out


def three_eigenvalue_check(g: Graph, tol: float = DEFAULT_TOL) -> ThreeEigenvalueReport:
    """Nonregular connected graphs with exactly three distinct eigenvalues.

    Claims checked: diameter 2; middle eigenvalue non-negative and zero
    exactly for complete bipartite graphs; largest eigenvalue integral unless
    complete bipartite. The smallest eigenvalue is only reported.
    """
    p = char_poly(g)
    if degree_profile(g).regular or count_distinct_roots(p) != 3 or not is_connected(g):
        return ThreeEigenvalueReport(applies=False)
    t1, t2, t3 = _distinct(numeric_spectrum(g, tol=tol), tol)
    cb = is_complete_bipartite(g)
    # integrality is decided exactly: an integer root of the monic polynomial
    k = round(t1)
    integral_root = abs(k - t1) < 1e-6 and p(k) == 0
    return ThreeEigenvalueReport(
        applies=True,
        diameter2=diameter(g) == 2,
        theta2_nonneg=t2 >= -tol,
        theta2_zero_iff_complete_bipartite=(abs(t2) < tol) == cb,
        theta1_integral_or_complete_bipartite=integral_root or cb,
        theta3_value=t3,
        eigenvalues=(t1, t2, t3),
    )


def join_detect_check(g: Graph) -> FlagPair:
    """Order n is a Laplacian eigenvalue iff the graph is a join."""
    spectral = char_poly(g, "laplacian")(g.n) == 0
    structural = structural_probe(g).is_join
    return FlagPair(spectral, structural)


@dataclass(frozen=True)
class BipartiteReport:
    bipartite: bool
    odd_coefficients_vanish: bool
    spectrum_symmetric: bool
    radius_equals_minus_min: bool
    connected: bool


def bipartite_equivalences(g: Graph, tol: float = DEFAULT_TOL) -> BipartiteReport:
    """The four bipartiteness statements: structure; coefficients of
    ``x^(n-i)`` vanish for odd i; eigenvalues symmetric about 0 (with
    multiplicity); spectral radius equal to minus the least eigenvalue."""
    p = char_poly(g)
    n = g.n
    odd_vanish = all(p.coeff(n - i) == 0 for i in range(1, n + 1, 2))
    vals = numeric_spectrum(g, tol=tol)
    symmetric = all(abs(vals[i] + vals[n - 1 - i]) < tol for i in range(n))
    return BipartiteReport(
        bipartite=is_bipartite(g),
        odd_coefficients_vanish=odd_vanish,
        spectrum_symmetric=symmetric,
        radius_equals_minus_min=abs(vals[0] + vals[-1]) < tol,
        connected=is_connected(g),
    )


def infer_bidegreed_counts(p: IntPoly, d1: int, d2: int) -> tuple[int, int]:
    """Vertex counts of degrees d1 and d2 from the adjacency polynomial of a
    graph known to have only those degrees: ``c1 + c2 = n`` and
    ``d1 c1 + d2 c2 = 2m``, where 2m is the second power sum."""
    if d1 == d2:
        raise PreconditionError("degrees must differ")
    n = p.degree
    two_m = power_sums(p, 2)[1]
    num = two_m - d2 * n
    den = d1 - d2
    if num % den:
        raise PreconditionError("no integral bidegreed solution")
    c1 = num // den
    c2 = n - c1
    if c1 < 0 or c2 < 0:
        raise PreconditionError("no non-negative bidegreed solution")
    return c1, c2


def complement_mate_bipartite(r: int, t: int) -> tuple[int, int] | None:
    """Positive integer roots ``p <= q`` of ``x^2 - (r + 2t)x + t^2``.

    When they exist, K_{p,q} shares its adjacency spectrum
    ``{t, -t, 0^(2t+r-2)}`` with the complement ``rK_1 + K_{t,t}`` of
    ``K_r v 2K_t``.
    """
    if r < 1 or t < 1:
        raise PreconditionError("r and t must be at least 1")
    disc = r * (r + 4 * t)
    root = isqrt(disc)
    if root * root != disc:
        return None
    b = r + 2 * t
    if (b - root) % 2:
        return None
    p, q = (b - root) // 2, (b + root) // 2
    if p < 1:
        return None
    return p, q


@dataclass
class SweepResult:
    order: int
    graphs: int
    connected: int
    violations: dict[str, list[str]]
    records: list[dict]

    def to_json(self, records: bool = False) -> dict:
        out = {
            "order": self.order,
            "graphs": self.graphs,
            "connected": self.connected,
            "violations": self.violations,
        }
        if records:
            out["records"] = self.records
        return out


SWEEP_CHECKS = (
    "one_positive_eigenvalue",
    "regularity",
    "bipartite_coefficients",
    "bipartite_symmetry",
    "bipartite_radius",
    "bipartite_radius_connected",
    "join_laplacian",
    "radius_bound",
    "radius_bound_equality",
    "three_eigenvalues",
)


def sweep(n: int, tol: float = DEFAULT_TOL, keep_records: bool = False) -> SweepResult:
    """Run every structural check on all graphs of order ``n``.

    ``bipartite_radius`` is the radius statement over all graphs; it is known
    to fail for disconnected graphs such as K3 + C4, so the connected variant
    is tracked separately.
    """
    from .enumerate import EnumerationSpec, enumerate_graphs
    from .graph6 import encode_graph6

    violations: dict[str, list[str]] = {k: [] for k in SWEEP_CHECKS}
    records = []
    total = conn = 0
    for g in enumerate_graphs(EnumerationSpec(n)):
        total += 1
        code = encode_graph6(g)
        rec: dict = {"graph6": code}
        pos = one_positive_eigenvalue_check(g)
        rec["one_positive"] = [pos.spectral, pos.structural]
        if not pos.agree:
            violations["one_positive_eigenvalue"].append(code)
        reg_spec = regularity_from_spectrum(g, tol)
        reg = degree_profile(g).regular
        rec["regular"] = [reg_spec, reg]
        if reg_spec != reg:
            violations["regularity"].append(code)
        bip = bipartite_equivalences(g, tol)
        rec["bipartite"] = asdict(bip)
        if bip.odd_coefficients_vanish != bip.bipartite:
            violations["bipartite_coefficients"].append(code)
        if bip.spectrum_symmetric != bip.bipartite:
            violations["bipartite_symmetry"].append(code)
        if bip.radius_equals_minus_min != bip.bipartite:
            violations["bipartite_radius"].append(code)
            if bip.connected:
                violations["bipartite_radius_connected"].append(code)
        jd = join_detect_check(g)
        rec["join"] = [jd.spectral, jd.structural]
        if not jd.agree:
            violations["join_laplacian"].append(code)
        if bip.connected:
            conn += 1
            try:
                br = check_bound(g, tol)
            except AssertionError:
                violations["radius_bound"].append(code)
            else:
                rec["bound"] = {"bound": str(br.bound), "rho": br.rho, "equality": br.equality}
                if br.equality != (br.regular or br.biregular_with_max_degree):
                    violations["radius_bound_equality"].append(code)
        three = three_eigenvalue_check(g, tol)
        if three.applies:
            rec["three_eigenvalues"] = asdict(three)
            if not (three.diameter2 and three.theta2_nonneg
                    and three.theta2_zero_iff_complete_bipartite):
                violations["three_eigenvalues"].append(code)
        if keep_records:
            records.append(rec)
    return SweepResult(n, total, conn, violations, records)


def probe(g: Graph, tol: float = DEFAULT_TOL) -> dict:
    """Structure, degree profile, bound report and every theorem check for
    one graph, as a JSON-ready record."""
    from .graph6 import encode_graph6

    sp = structural_probe(g)
    prof = degree_profile(g)
    rec: dict = {
        "graph6": encode_graph6(g),
        "order": g.n,
        "edges": g.m,
        "degrees": list(prof.degrees),
        "min_degree": prof.min_degree,
        "max_degree": prof.max_degree,
        "regular": prof.regular,
        "biregular": prof.biregular,
        "connected": sp.connected,
        "bipartite": sp.bipartite,
        "diameter": None if sp.diameter == float("inf") else int(sp.diameter),
        "is_join": sp.is_join,
        "complete_multipartite_plus_isolated": sp.complete_multipartite_plus_isolated,
        "part_sizes": list(sp.part_sizes) if sp.part_sizes else None,
        "isolated": sp.isolated,
    }
    rec["bound"] = check_bound(g, tol).to_json() if sp.connected else None
    pos = one_positive_eigenvalue_check(g)
    rec["one_positive_eigenvalue"] = {"spectral": pos.spectral, "structural": pos.structural}
    rec["regularity_from_spectrum"] = regularity_from_spectrum(g, tol)
    rec["bipartite_checks"] = asdict(bipartite_equivalences(g, tol))
    jd = join_detect_check(g)
    rec["join_laplacian"] = {"spectral": jd.spectral, "structural": jd.structural}
    three = three_eigenvalue_check(g, tol)
    rec["three_eigenvalues"] = asdict(three) if three.applies else None
    return rec
