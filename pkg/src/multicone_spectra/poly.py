"""Integer polynomials, root counting and power sums.

Coefficients are stored low-to-high as Python ints, so every operation is
exact. Rational intermediate values (Euclidean remainders, Sturm chains) use
``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import PreconditionError


def _strip(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = _strip(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a: int, b: int) -> "IntPoly":
        """``p(a + b x)``."""
        out = IntPoly([])
        lin = IntPoly([a, b])
        for c in reversed(self.coeffs):
            out = out * lin + IntPoly([c])
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a polynomial with leading coefficient +-1."""
        if not other.coeffs or abs(other.coeffs[-1]) != 1:
            raise PreconditionError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly([]), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] * lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        if r.coeffs:
            raise PreconditionError(f"{other} does not divide {self}")
        return q

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPoly":
        return cls(int(c) for c in data)


# -- rational helpers ------------------------------------------------------


def _rat_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, c in enumerate(b):
            a[shift + j] -= q * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _rat(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Monic gcd. For monic integer inputs the result is integral (Gauss)."""
    a, b = _rat(p), _rat(q)
    while b:
        a, b = b, _rat_rem(a, b)
    if not a:
        return IntPoly([])
    lead = a[-1]
    monic = [c / lead for c in a]
    if any(c.denominator != 1 for c in monic):
        # scale to a primitive integer polynomial with positive leading term
        den = lcm(*(c.denominator for c in monic))
        return IntPoly(int(c * den) for c in monic)
    return IntPoly(int(c) for c in monic)


def sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    chain = [_rat(p), _rat(p.derivative())]
    while chain[-1]:
        r = _rat_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(values: Iterable) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_positive_roots(p: IntPoly) -> int:
    """Distinct real roots in (0, inf) by Sturm's theorem."""
    if p.degree < 1:
        return 0
    c = list(p.coeffs)
    while c[0] == 0:
        c.pop(0)  # roots at zero are not positive
    p = IntPoly(c)
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    at_zero = _sign_changes(f[0] for f in chain)
    at_inf = _sign_changes(f[-1] for f in chain)
    return at_zero - at_inf


def count_positive_roots(p: IntPoly) -> int:
    """Positive real roots counted with multiplicity.

    A root of multiplicity k survives in p, gcd(p, p'), ... for exactly k
    steps, so summing the distinct counts along that chain gives the total.
    """
    total = 0
    while p.degree >= 1:
        total += count_distinct_positive_roots(p)
        p = poly_gcd(p, p.derivative())
    return total


def count_distinct_roots(p: IntPoly) -> int:
    if p.degree < 1:
        return 0
    return p.degree - poly_gcd(p, p.derivative()).degree


def power_sums(p: IntPoly, kmax: int) -> list[int]:
    """``[p_1, ..., p_kmax]`` with ``p_k`` the k-th power sum of the roots.

    Newton's identities for a monic polynomial. For an adjacency polynomial
    ``p_k`` is the number of closed walks of length k.
    """
    if kmax < 1:
        raise PreconditionError("kmax must be at least 1")
    if not p.is_monic():
        raise PreconditionError("power sums need a monic polynomial")
    n = p.degree
    # a[i] is the coefficient of x^(n-i)
    a = [p.coeff(n - i) for i in range(n + 1)]
    s: list[int] = []
    for k in range(1, kmax + 1):
        acc = -k * a[k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            acc -= a[i] * s[k - i - 1]
        s.append(acc)
    return s
