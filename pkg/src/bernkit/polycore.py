"""Exact base ring: rationals, dense univariate polynomials, counting helpers.

Coefficients are `fractions.Fraction`, which keeps every stored value reduced
with a positive denominator.  Polynomials are immutable dense coefficient
tuples carrying a symbolic variable tag ("z" or "y"); the tag is metadata for
display, but mixing tags in a binary operation is rejected as a bug.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: degree of the zero polynomial (a sentinel below every integer, never -1)
NEG_INFINITY = float("-inf")


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, m: int) -> int:
    """C(n, m); zero outside 0 <= m <= n."""
    if m < 0 or m > n:
        return 0
    return math.comb(n, m)


def multinomial(parts: Sequence[int]) -> int:
    """factorial(sum(parts)) / prod(factorial(p) for p in parts), exactly."""
    total = sum(parts)
    out = 1
    for p in parts:
        out *= math.comb(total, p)
        total -= p
    return out


class UniPoly:
    """Dense univariate polynomial over the rationals.

    coeffs[i] is the coefficient of var**i.  Trailing zeros are stripped on
    construction; the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "z"):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def constant(cls, c: Scalar, var: str = "z") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def variable(cls, var: str = "z") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, c: Scalar, power: int, var: str = "z") -> "UniPoly":
        return cls([0] * power + [c], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def constant_coefficient(self) -> Fraction:
        return self.coefficient(0)

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ValueError(
                f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and self.var == other.var
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.var))

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_var(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = UniPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, at: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def compose_affine(self, a: Scalar, b: Scalar) -> "UniPoly":
        """Return p(a*var + b) with coefficients expanded exactly."""
        lin = UniPoly([b, a], self.var)
        acc = UniPoly((), self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def div_rem(self, d: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division: self = q*d + r with deg r < deg d."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        self._check_var(d)
        dd = len(d.coeffs) - 1
        num = list(self.coeffs)
        if len(num) - 1 < dd:
            return UniPoly((), self.var), self
        lead = d.coeffs[-1]
        q = [Fraction(0)] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if not c:
                continue
            f = c / lead
            q[i - dd] = f
            for j in range(dd + 1):
                num[i - dd + j] -= f * d.coeffs[j]
        return UniPoly(q, self.var), UniPoly(num[:dd], self.var)

    def is_divisible_by(self, d: "UniPoly") -> bool:
        return not self.div_rem(d)[1]


def falling_product(a: int, b: int, length: int, var: str = "z") -> UniPoly:
    """prod_{r=1}^{length} (a*var + b - r); the empty product is 1."""
    if length < 0:
        raise ValueError("length must be >= 0")
    out = UniPoly([1], var)
    for r in range(1, length + 1):
        out = out * UniPoly([b - r, a], var)
    return out
