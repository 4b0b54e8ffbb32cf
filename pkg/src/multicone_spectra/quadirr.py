"""Exact quadratic irrationals and eigenvalue multisets.

A :class:`QuadIrr` is ``(p + c*sqrt(d)) / q`` kept in a normal form
(q > 0, d squarefree, gcd(p, c, q) = 1, c = 0 whenever d is 0 or 1), so
equality is structural. Ordering is decided with integer square roots at
increasing precision; since distinct normal forms are distinct reals the
refinement always terminates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Iterable, Sequence

from .errors import PreconditionError
from .poly import IntPoly


def squarefree_split(n: int) -> tuple[int, int]:
    """``(k, d)`` with ``n = k*k*d`` and d squarefree, for n >= 0."""
    if n < 0:
        raise PreconditionError("radicand must be non-negative")
    if n == 0:
        return 0, 0
    k, d = 1, n
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            k *= f
        f += 1
    return k, d


def _floor_sqrt_scaled(c: int, d: int, bits: int) -> int:
    """floor(c * sqrt(d) * 2**bits)."""
    t = isqrt(c * c * d << (2 * bits))
    if c >= 0:
        return t
    exact = t * t == c * c * d << (2 * bits)
    return -t if exact else -t - 1


@total_ordering
class QuadIrr:
    __slots__ = ("p", "c", "d", "q")

    def __init__(self, p: int, c: int = 0, d: int = 0, q: int = 1):
        if q == 0:
            raise PreconditionError("zero denominator")
        if d < 0:
            raise PreconditionError("negative radicand")
        k, d = squarefree_split(d)
        c *= k
        if d == 1:
            p, c, d = p + c, 0, 0
        if c == 0 or d == 0:
            c, d = 0, 0
        if q < 0:
            p, c, q = -p, -c, -q
        g = gcd(gcd(p, c), q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "c", c // g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "q", q // g)

    def __setattr__(self, name, value):
        raise AttributeError("QuadIrr is immutable")

    def __reduce__(self):
        return (QuadIrr, (self.p, self.c, self.d, self.q))

    @classmethod
    def rational(cls, value) -> "QuadIrr":
        f = Fraction(value)
        return cls(f.numerator, 0, 0, f.denominator)

    @classmethod
    def from_surd(cls, a, b, radicand: int) -> "QuadIrr":
        """``a + b*sqrt(radicand)`` for rationals a, b."""
        a, b = Fraction(a), Fraction(b)
        q = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(int(a * q), int(b * q), radicand, q)

    @property
    def is_rational(self) -> bool:
        return self.c == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise PreconditionError(f"{self} is irrational")
        return Fraction(self.p, self.q)

    def conjugate(self) -> "QuadIrr":
        return QuadIrr(self.p, -self.c, self.d, self.q)

    def _key(self):
        return (self.p, self.c, self.d, self.q)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadIrr.rational(other)
        if not isinstance(other, QuadIrr):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _interval(self, bits: int) -> tuple[Fraction, Fraction]:
        lo_num = (self.p << bits) + _floor_sqrt_scaled(self.c, self.d, bits)
        scale = self.q << bits
        return Fraction(lo_num, scale), Fraction(lo_num + 1, scale)

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadIrr.rational(other)
        if not isinstance(other, QuadIrr):
            return NotImplemented
        if self == other:
            return False
        bits = 32
        while True:
            a_lo, a_hi = self._interval(bits)
            b_lo, b_hi = other._interval(bits)
            if a_hi <= b_lo:
                return True
            if b_hi <= a_lo:
                return False
            bits *= 2

    def __float__(self):
        return (self.p + self.c * self.d ** 0.5) / self.q

    def __neg__(self) -> "QuadIrr":
        return QuadIrr(-self.p, -self.c, self.d, self.q)

    def __add__(self, other) -> "QuadIrr":
        if isinstance(other, QuadIrr):
            if other.is_rational:
                other = other.as_fraction()
            elif self.is_rational:
                return other + self.as_fraction()
            elif other.d == self.d:
                return QuadIrr.from_surd(
                    Fraction(self.p, self.q) + Fraction(other.p, other.q),
                    Fraction(self.c, self.q) + Fraction(other.c, other.q),
                    self.d,
                )
            else:
                raise PreconditionError("sum leaves the quadratic field")
        f = Fraction(other)
        return QuadIrr(self.p * f.denominator + f.numerator * self.q,
                       self.c * f.denominator, self.d, self.q * f.denominator)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadIrr":
        return self + (-other)

    def __rsub__(self, other) -> "QuadIrr":
        return (-self) + other

    def __repr__(self):
        return f"QuadIrr({self.p}, {self.c}, {self.d}, {self.q})"

    def __str__(self):
        if self.is_rational:
            return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"
        surd = ("" if abs(self.c) == 1 else str(abs(self.c))) + f"√{self.d}"
        if self.p == 0:
            body = ("-" if self.c < 0 else "") + surd
            return body if self.q == 1 else f"({body})/{self.q}"
        body = f"{self.p}{'-' if self.c < 0 else '+'}{surd}"
        return body if self.q == 1 else f"({body})/{self.q}"

    def to_json(self) -> dict:
        return {"p": self.p, "c": self.c, "d": self.d, "q": self.q}


def _as_quad(v) -> QuadIrr:
    return v if isinstance(v, QuadIrr) else QuadIrr.rational(v)


class Spectrum:
    """Eigenvalue multiset, sorted descending, equal values merged."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[object, int]]):
        merged: dict[QuadIrr, int] = {}
        for value, mult in entries:
            if mult < 0:
                raise PreconditionError("negative multiplicity")
            if mult == 0:
                continue
            v = _as_quad(value)
            merged[v] = merged.get(v, 0) + mult
        object.__setattr__(
            self, "entries", tuple(sorted(merged.items(), key=lambda e: e[0], reverse=True))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Spectrum is immutable")

    def __reduce__(self):
        return (Spectrum, (self.entries,))

    @classmethod
    def from_values(cls, values: Iterable) -> "Spectrum":
        return cls((v, 1) for v in values)

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> list[QuadIrr]:
        """Eigenvalues with repetition, descending."""
        return [v for v, m in self.entries for _ in range(m)]

    def largest(self) -> QuadIrr:
        return self.entries[0][0]

    def smallest(self) -> QuadIrr:
        return self.entries[-1][0]

    def multiplicity(self, value) -> int:
        v = _as_quad(value)
        return next((m for e, m in self.entries if e == v), 0)

    def is_conjugate_closed(self) -> bool:
        return all(self.multiplicity(v.conjugate()) == m for v, m in self.entries if not v.is_rational)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Spectrum({self})"

    def __str__(self):
        return " ".join(f"[{v}]^{m}" for v, m in self.entries)

    def to_json(self) -> list[dict]:
        return [dict(v.to_json(), mult=m) for v, m in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "Spectrum":
        return cls((QuadIrr(e["p"], e["c"], e["d"], e["q"]), e["mult"]) for e in data)


def spectrum_to_poly(s: Spectrum) -> IntPoly:
    """Product of ``(x - v)**mult``; conjugate surds are paired into
    rational quadratics, and the result must have integer coefficients."""
    if not s.is_conjugate_closed():
        raise PreconditionError("spectrum is not closed under conjugation")
    coeffs = [Fraction(1)]

    def mul(factor: list[Fraction]):
        nonlocal coeffs
        out = [Fraction(0)] * (len(coeffs) + len(factor) - 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        coeffs = out

    for v, m in s.entries:
        if v.is_rational:
            factor = [-v.as_fraction(), Fraction(1)]
        elif v.c > 0:
            # (x - v)(x - v') = x^2 - 2p/q x + (p^2 - c^2 d)/q^2
            factor = [Fraction(v.p * v.p - v.c * v.c * v.d, v.q * v.q),
                      Fraction(-2 * v.p, v.q), Fraction(1)]
        else:
            continue
        for _ in range(m):
            mul(factor)
    if any(c.denominator != 1 for c in coeffs):
        raise PreconditionError("spectrum does not give an integer polynomial")
    return IntPoly(int(c) for c in coeffs)
