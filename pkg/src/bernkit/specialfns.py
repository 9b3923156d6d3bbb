"""Named polynomial and number families.

Bernoulli numbers B_k and polynomials B_k(z), the Eulerian number triangle
A(k, j) and polynomials A_k(y), higher-order Bernoulli polynomials, and the
rational-function form of the polylogarithm at negative integer order.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .polycore import UniPoly, binomial, factorial


class BernoulliCache:
    """Monotone cache of Bernoulli numbers and polynomials.

    Growth happens under a lock; entries are appended only after they are
    fully built, so concurrent readers see initialized prefixes only.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.numbers = [Fraction(1)]
        self.polys = [UniPoly([1], "z")]

    def ensure(self, k: int) -> None:
        if k < len(self.polys):
            return
        with self._lock:
            while len(self.numbers) <= k:
                # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
                m = len(self.numbers)
                acc = sum(binomial(m + 1, j) * self.numbers[j]
                          for j in range(m))
                self.numbers.append(Fraction(-acc, m + 1))
            while len(self.polys) <= k:
                m = len(self.polys)
                self.polys.append(UniPoly(
                    [binomial(m, i) * self.numbers[m - i]
                     for i in range(m + 1)], "z"))


class EulerianCache:
    """Monotone cache of the Eulerian triangle and polynomials.

    Row conventions are pinned by the golden tests against the classical
    table (A_3(y) = y^3 + 4y^2 + y, ...): A(0,0) = 1, A(k,0) = 0 for k >= 1,
    and A(k,j) = j*A(k-1,j) + (k-j+1)*A(k-1,j-1).
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.triangle = [[1]]
        self.polys = [UniPoly([1], "y")]

    def ensure(self, k: int) -> None:
        if k < len(self.polys):
            return
        with self._lock:
            while len(self.triangle) <= k:
                m = len(self.triangle)
                prev = self.triangle[-1]
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    left = prev[j] if j < len(prev) else 0
                    row[j] = j * left + (m - j + 1) * prev[j - 1]
                self.triangle.append(row)
                self.polys.append(UniPoly(row, "y"))


#: process-wide caches; reachable so tests can inject faults deliberately
bernoulli_cache = BernoulliCache()
eulerian_cache = EulerianCache()


def bernoulli_number(k: int) -> Fraction:
    """B_k, via the recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    bernoulli_cache.ensure(k)
    return bernoulli_cache.numbers[k]


def bernoulli_poly(k: int) -> UniPoly:
    """B_k(z) = sum_j C(k,j) B_j z^{k-j}; monic of degree k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    bernoulli_cache.ensure(k)
    return bernoulli_cache.polys[k]


def eulerian_number(k: int, j: int) -> int:
    """A(k, j); zero outside 0 <= j <= k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if j < 0 or j > k:
        return 0
    eulerian_cache.ensure(k)
    return eulerian_cache.triangle[k][j]


def eulerian_poly(k: int) -> UniPoly:
    """A_k(y) = sum_j A(k,j) y^j, with A_0 = 1 and A_k(0) = 0 for k >= 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    eulerian_cache.ensure(k)
    return eulerian_cache.polys[k]


def higher_bernoulli_poly(m: int, r: int) -> UniPoly:
    """Order-r Bernoulli polynomial: m! * [x^m] (x/(e^x-1))^r e^{zx}."""
    if m < 0 or r < 1:
        raise ValueError("need m >= 0 and r >= 1")
    # local import: the series engine builds its generators on this module
    from .series import exp_zx, x_over_expm1_pow
    s = x_over_expm1_pow(r, m) * exp_zx(m)
    return factorial(m) * s.coefficient(m)


def polylog_neg_check(k: int, order: int) -> bool:
    """True iff A_k(y)/(1-y)^{k+1} = sum_m m^k y^m through y^order."""
    if k < 1 or order < 1:
        raise ValueError("need k >= 1 and order >= 1")
    from .series import TruncSeries
    a_k = eulerian_poly(k)
    numer = TruncSeries(
        order, [UniPoly.constant(a_k.coefficient(j), "y")
                for j in range(order + 1)], var="y")
    denom = TruncSeries(
        order, [UniPoly.constant(binomial(k + 1, j) * (-1) ** j, "y")
                for j in range(order + 1)], var="y")
    expansion = numer * denom.inverse()
    return all(
        expansion.coefficient(m) == UniPoly.constant(Fraction(m) ** k, "y")
        for m in range(order + 1))
