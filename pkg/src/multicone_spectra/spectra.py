"""Characteristic polynomials, closed-form multicone spectra, spectral
transforms for joins and complements, and numeric eigen-data."""

from __future__ import annotations

import warnings
from typing import Sequence

import mpmath
import numpy as np

from .errors import PreconditionError
from .graph import Graph
from .poly import IntPoly
from .quadirr import QuadIrr, Spectrum

KINDS = ("adjacency", "laplacian", "signless")

DEFAULT_TOL = 1e-9

# Faddeev-LeVerrier intermediates satisfy |M_k| <= 2^n R^(k-1) with R the
# row-sum bound 2(n-1); for n <= 12 that stays below 2^63, and int64
# wraparound is harmless when every true value fits.
_INT64_MAX_ORDER = 12


class IllConditionedWarning(UserWarning):
    pass


def char_poly(g: Graph, kind: str = "adjacency") -> IntPoly:
    """``det(xI - M)`` for the adjacency, Laplacian or signless Laplacian."""
    if kind not in KINDS:
        raise PreconditionError(f"unknown matrix kind {kind!r}")
    n = g.n
    dtype = np.int64 if n <= _INT64_MAX_ORDER else object
    a = g.matrix(kind, dtype=np.int64).astype(dtype)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.zeros((n, n), dtype=dtype)
    eye = np.eye(n, dtype=np.int64).astype(dtype)
    for k in range(1, n + 1):
        m = a @ m + coeffs[n - k + 1] * eye
        tr = int(np.trace(a @ m))
        # division is exact by the Newton identities
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return IntPoly(coeffs)


def multicone_adjacency_spectrum(r: int, s: int, t: int) -> Spectrum:
    """Adjacency spectrum of ``K_r v sK_t``:
    ``-1`` with multiplicity ``r-1+s(t-1)``, ``t-1`` with ``s-1`` and the two
    roots of ``x^2 - a x + b`` where ``a = r+t-2`` and
    ``b = (r-1)(t-1) - rst``."""
    if min(r, s, t) < 1:
        raise PreconditionError("multicone parameters must be at least 1")
    a = r + t - 2
    b = (r - 1) * (t - 1) - r * s * t
    disc = a * a - 4 * b
    return Spectrum([
        (-1, r - 1 + s * (t - 1)),
        (t - 1, s - 1),
        (QuadIrr(a, 1, disc, 2), 1),
        (QuadIrr(a, -1, disc, 2), 1),
    ])


def multicone_laplacian_spectrum(r: int, s: int, t: int) -> Spectrum:
    if min(r, s, t) < 1:
        raise PreconditionError("multicone parameters must be at least 1")
    return Spectrum([(r + s * t, r), (r + t, s * (t - 1)), (r, s - 1), (0, 1)])


def join_char_poly(p1: IntPoly, n1: int, r1: int, p2: IntPoly, n2: int, r2: int) -> IntPoly:
    """Adjacency polynomial of the join of an r1-regular graph of order n1
    and an r2-regular graph of order n2, from their polynomials:
    ``P1/(x-r1) * P2/(x-r2) * ((x-r1)(x-r2) - n1 n2)``."""
    if p1.degree != n1 or p2.degree != n2:
        raise PreconditionError("polynomial degree must equal the order")
    lin1, lin2 = IntPoly([-r1, 1]), IntPoly([-r2, 1])
    q1, rem1 = p1.divmod_exact(lin1)
    q2, rem2 = p2.divmod_exact(lin2)
    if rem1.coeffs or rem2.coeffs:
        raise PreconditionError("input is not regular with the stated degree")
    return q1 * q2 * (lin1 * lin2 - IntPoly([n1 * n2]))


def complement_spectrum_regular(s: Spectrum, n: int, r: int) -> Spectrum:
    """Spectrum of the complement of an r-regular graph of order n:
    ``r`` becomes ``n-1-r``, every other eigenvalue ``v`` becomes ``-1-v``."""
    if s.order != n:
        raise PreconditionError("spectrum size does not match order")
    if s.largest() != r:
        raise PreconditionError(f"largest eigenvalue is {s.largest()}, not {r}")
    rest = s.values()[1:]
    return Spectrum([(n - 1 - r, 1)] + [(-1 - v, 1) for v in rest])


def complement_poly_regular(p: IntPoly, n: int, r: int) -> IntPoly:
    """Polynomial form of the regular complement map, valid whatever field
    the eigenvalues live in: ``(-1)^n (x-n+1+r)/(x+1+r) * P(-x-1)``."""
    if p.degree != n:
        raise PreconditionError("polynomial degree must equal the order")
    if p(r) != 0:
        raise PreconditionError(f"{r} is not an eigenvalue")
    q = p.compose_linear(-1, -1) * (-1) ** n
    return q.exact_div(IntPoly([1 + r, 1])) * IntPoly([-(n - 1 - r), 1])


def laplacian_complement_poly(p: IntPoly, n: int) -> IntPoly:
    """Polynomial form of the Laplacian complement map:
    ``(-1)^n x P(n-x) / (x-n)``."""
    if p.degree != n:
        raise PreconditionError("polynomial degree must equal the order")
    if p(0) != 0:
        raise PreconditionError("a Laplacian polynomial must vanish at 0")
    q = p.compose_linear(n, -1) * (-1) ** n
    return q.exact_div(IntPoly([-n, 1])) * IntPoly.x()


def _drop_zero(s: Spectrum) -> list[QuadIrr]:
    vals = s.values()
    zero = QuadIrr(0)
    if zero not in vals:
        raise PreconditionError("a Laplacian spectrum must contain 0")
    vals.remove(zero)
    return vals


def laplacian_complement_spectrum(s: Spectrum, n: int) -> Spectrum:
    if s.order != n:
        raise PreconditionError("spectrum size does not match order")
    if any(v < 0 or v > n for v in s.values()):
        raise PreconditionError("Laplacian eigenvalues must lie in [0, n]")
    return Spectrum([(n - v, 1) for v in _drop_zero(s)] + [(0, 1)])


def laplacian_join_spectrum(s_g: Spectrum, n: int, s_h: Spectrum, k: int) -> Spectrum:
    """Laplacian spectrum of ``G v H`` from those of G (order n) and H (order k)."""
    if s_g.order != n or s_h.order != k:
        raise PreconditionError("spectrum size does not match order")
    rest_g = _drop_zero(s_g)
    rest_h = _drop_zero(s_h)
    return Spectrum(
        [(n + k, 1), (0, 1)]
        + [(k + a, 1) for a in rest_g]
        + [(n + b, 1) for b in rest_h]
    )


def numeric_spectrum(g: Graph, kind: str = "adjacency", tol: float = DEFAULT_TOL) -> list[float]:
    """Eigenvalues in descending order (LAPACK symmetric solver)."""
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    if kind not in KINDS:
        raise PreconditionError(f"unknown matrix kind {kind!r}")
    vals = np.linalg.eigvalsh(g.matrix(kind, dtype=float))
    return sorted(vals.tolist(), reverse=True)


def spectral_radius(g: Graph) -> float:
    return numeric_spectrum(g)[0]


def _eigen_groups(g: Graph, tol: float, dps: int):
    """Distinct adjacency eigenvalues with their eigenvector blocks, computed
    in extended precision."""
    with mpmath.workdps(dps):
        a = mpmath.matrix(g.adjacency_matrix().tolist())
        evals, evecs = mpmath.eigsy(a)
        order = sorted(range(g.n), key=lambda i: -evals[i])
        groups: list[tuple[mpmath.mpf, list[int]]] = []
        noise = mpmath.mpf(10) ** (-(dps // 2))
        for i in order:
            if groups and abs(groups[-1][0] - evals[i]) < 10 * tol:
                spread = abs(groups[-1][0] - evals[i])
                if spread > noise:
                    warnings.warn(
                        f"eigenvalues {float(groups[-1][0])} and {float(evals[i])} "
                        f"are closer than {10 * tol}", IllConditionedWarning)
                groups[-1][1].append(i)
            else:
                groups.append((evals[i], [i]))
        return groups, evecs


def main_angles(g: Graph, tol: float = DEFAULT_TOL, dps: int = 40) -> list[tuple[float, list[float]]]:
    """Squared main angles: for each distinct eigenvalue ``mu`` (descending),
    the list over vertices ``j`` of the squared norm of the projection of
    ``e_j`` onto the ``mu``-eigenspace."""
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    groups, evecs = _eigen_groups(g, tol, dps)
    with mpmath.workdps(dps):
        out = []
        for mu, cols in groups:
            sq = [float(mpmath.fsum(evecs[j, c] ** 2 for c in cols)) for j in range(g.n)]
            out.append((float(mu), sq))
        return out


def vertex_deleted_identity_residual(
    g: Graph, j: int, xs: Sequence[float], tol: float = DEFAULT_TOL, dps: int = 40
) -> float:
    """``max |P_{G-j}(x) - P_G(x) * sum_i alpha_ij^2 / (x - mu_i)|`` over xs.

    Both polynomials are exact; only the main angles and eigenvalues are
    numeric.
    """
    if not 0 <= j < g.n:
        raise PreconditionError(f"vertex {j} out of range")
    groups, evecs = _eigen_groups(g, tol, dps)
    p_g = char_poly(g)
    p_del = char_poly(g.delete_vertex(j)) if g.n > 1 else IntPoly([1])
    worst = 0.0
    with mpmath.workdps(dps):
        for x in xs:
            if any(abs(x - mu) <= 10 * tol for mu, _ in groups):
                raise PreconditionError(f"sample point {x} is too close to an eigenvalue")
            xm = mpmath.mpf(x)
            total = mpmath.fsum(
                mpmath.fsum(evecs[j, c] ** 2 for c in cols) / (xm - mu) for mu, cols in groups
            )
            resid = abs(p_del(xm) - p_g(xm) * total)
            worst = max(worst, float(resid))
    return worst


def describe_spectrum(
    g: Graph, kind: str = "adjacency", family: tuple[int, int, int] | None = None,
    tol: float = DEFAULT_TOL,
) -> dict:
    """Polynomial plus spectrum of ``g``: exact closed form when ``family``
    names a multicone and a formula exists for ``kind``, otherwise numeric
    eigenvalues (rounded to 12 places for stable output)."""
    p = char_poly(g, kind)
    exact = None
    if family is not None:
        if kind == "adjacency":
            exact = multicone_adjacency_spectrum(*family)
        elif kind == "laplacian":
            exact = multicone_laplacian_spectrum(*family)
    return {
        "kind": kind,
        "order": g.n,
        "edges": g.m,
        "polynomial": p,
        "spectrum": exact,
        "numeric": [round(v, 12) + 0.0 for v in numeric_spectrum(g, kind, tol)],
    }
