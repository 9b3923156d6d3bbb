"""Truncated formal power series in x with polynomial coefficients.

The ring is Q[z][[x]] cut at a fixed order N, held as a list of UniPoly
coefficients (index = power of x).  All arithmetic is exact; operations on
series of different orders truncate to the smaller order.  Builders for the
generating functions used downstream live here as well: e^{zx}, e^x,
(x/(e^x-1))^r, and the two constructions of the auxiliary series F_k(x, z).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .polycore import UniPoly, factorial
from .specialfns import bernoulli_poly, eulerian_poly


class TruncSeries:
    """Power series through x**order with UniPoly coefficients."""

    __slots__ = ("order", "coeffs", "var")

    def __init__(self, order: int, coeffs: Iterable[UniPoly] = (),
                 var: str = "z"):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs)[:order + 1]
        if cs:
            var = cs[0].var
        cs += [UniPoly((), var)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def one(cls, order: int, var: str = "z") -> "TruncSeries":
        return cls(order, [UniPoly.constant(1, var)], var)

    def coefficient(self, m: int) -> UniPoly:
        if not 0 <= m <= self.order:
            raise ValueError(
                f"coefficient index {m} beyond truncation order {self.order}")
        return self.coeffs[m]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, coeffs={list(self.coeffs)!r})"

    def _promote(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other, self.var)
        if isinstance(other, UniPoly):
            return TruncSeries(self.order, [other], self.var)
        return other

    def __add__(self, other):
        other = self._promote(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries(
            n, [self.coeffs[m] + other.coeffs[m] for m in range(n + 1)],
            self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._promote(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            return TruncSeries(
                self.order, [c * other for c in self.coeffs], self.var)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [UniPoly((), self.var) for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            raise ValueError("negative series power")
        out = TruncSeries.one(self.order, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant coefficient must be a unit.

        A unit in the coefficient ring Q[z] is a nonzero constant; a series
        whose constant coefficient has positive degree (or is zero) has no
        inverse with polynomial coefficients.
        """
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("series with zero constant term has no inverse")
        if c0.degree != 0:
            raise ValueError(
                "constant coefficient is not a unit (degree > 0)")
        u = Fraction(1) / c0.coefficient(0)
        inv = [UniPoly.constant(u, self.var)]
        for m in range(1, self.order + 1):
            acc = UniPoly((), self.var)
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * inv[m - j]
            inv.append(acc * (-u))
        return TruncSeries(self.order, inv, self.var)


def poly_at_series(p: UniPoly, s: TruncSeries) -> TruncSeries:
    """Evaluate the polynomial p at a series argument (Horner)."""
    acc = TruncSeries(s.order, (), s.var)
    for c in reversed(p.coeffs):
        acc = acc * s + c
    return acc


def exp_zx(order: int) -> TruncSeries:
    """e^{zx}: coefficient of x^m is z^m/m!."""
    return TruncSeries(
        order, [UniPoly.monomial(Fraction(1, factorial(m)), m, "z")
                for m in range(order + 1)])


def exp_x(order: int, var: str = "z") -> TruncSeries:
    """e^x as a series with constant polynomial coefficients 1/m!."""
    return TruncSeries(
        order, [UniPoly.constant(Fraction(1, factorial(m)), var)
                for m in range(order + 1)], var)


def one_minus_exp_x(order: int, var: str = "z") -> TruncSeries:
    """1 - e^x (zero constant term)."""
    return TruncSeries(
        order, [UniPoly.constant(
            Fraction(0) if m == 0 else Fraction(-1, factorial(m)), var)
            for m in range(order + 1)], var)


def x_over_expm1_pow(r: int, order: int, var: str = "z") -> TruncSeries:
    """(x/(e^x - 1))^r, as the r-th power of the inverse of (e^x - 1)/x."""
    if r < 1:
        raise ValueError("r must be >= 1")
    expm1_over_x = TruncSeries(
        order, [UniPoly.constant(Fraction(1, factorial(m + 1)), var)
                for m in range(order + 1)], var)
    return expm1_over_x.inverse() ** r


def build_F_direct(k: int, order: int) -> TruncSeries:
    """F_k(x,z) from its defining coefficients:

    1 + (-1)^k (x^{k+1}/k!) sum_{m>=0} B_{m+k+1}(z)/(m+k+1) * x^m/m!
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    sign = (-1) ** k
    cs = [UniPoly.constant(1, "z")] + [UniPoly((), "z")] * k
    for m in range(order - k):
        cs.append(bernoulli_poly(m + k + 1)
                  * Fraction(sign, factorial(k) * factorial(m) * (m + k + 1)))
    return TruncSeries(order, cs)


def build_G(k: int, order: int) -> TruncSeries:
    """G_k(x,z) = ((-1)^k/k!) sum_{j>=1} B_{j+k}(z)/((j-1)!(j+k)) x^j,

    so that 1 + x^k G_k(x,z) = F_k(x,z) through the truncation order.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    sign = (-1) ** k
    cs = [UniPoly((), "z")]
    for j in range(1, order + 1):
        cs.append(bernoulli_poly(j + k)
                  * Fraction(sign, factorial(k) * factorial(j - 1) * (j + k)))
    return TruncSeries(order, cs)


def build_F_eulerian(k: int, order: int) -> TruncSeries:
    """F_k(x,z) rebuilt from Eulerian polynomials:

    (x/(e^x-1))^{k+1} e^{xz} sum_{j=0}^{k} (1-e^x)^j A_{k-j}(e^x)/(k-j)! * z^j/j!
    """
    if k < 1:
        raise ValueError("k must be >= 1 (k = 0 is covered by the "
                         "direct construction)")
    base = x_over_expm1_pow(k + 1, order) * exp_zx(order)
    ex = exp_x(order)
    one_minus = one_minus_exp_x(order)
    acc = TruncSeries(order, (), "z")
    for j in range(k + 1):
        term = (one_minus ** j) * poly_at_series(eulerian_poly(k - j), ex)
        term = term * UniPoly.monomial(
            Fraction(1, factorial(j) * factorial(k - j)), j, "z")
        acc = acc + term
    return base * acc
