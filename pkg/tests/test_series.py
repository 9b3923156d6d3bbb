import random
from fractions import Fraction

import pytest

from bernkit.polycore import UniPoly, factorial
from bernkit.series import (TruncSeries, build_F_direct, build_F_eulerian,
                            build_G, exp_x, exp_zx, one_minus_exp_x,
                            poly_at_series, x_over_expm1_pow)
from bernkit.specialfns import bernoulli_number, bernoulli_poly


def const_series(values, order, var="z"):
    return TruncSeries(order, [UniPoly.constant(v, var) for v in values], var)


def test_mul_basic():
    a = const_series([1, 1], 3)
    b = const_series([1, -1], 3)
    assert a * b == const_series([1, 0, -1, 0], 3)


def test_pow_zero_is_identity():
    a = const_series([1, 5, 7], 4)
    assert a ** 0 == TruncSeries.one(4)


def test_pow_matches_repeated_mul():
    rng = random.Random(3)
    for _ in range(10):
        a = const_series([Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                          for _ in range(7)], 6)
        acc = TruncSeries.one(6)
        for n in range(5):
            assert a ** n == acc
            acc = acc * a


def test_mul_commutes_and_associates():
    rng = random.Random(11)
    for _ in range(10):
        a, b, c = (const_series([rng.randint(-5, 5) for _ in range(6)], 5)
                   for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_orders_truncate_to_smaller():
    a = const_series([1, 1, 1, 1, 1], 4)
    b = const_series([1, 2], 2)
    assert (a * b).order == 2
    assert (a + b).order == 2


def test_inverse_roundtrip_and_bernoulli_numbers():
    s = x_over_expm1_pow(1, 10)
    for m in range(11):
        coeff = s.coefficient(m)
        assert coeff == UniPoly.constant(
            bernoulli_number(m) * Fraction(1, factorial(m)), "z")
    # A * A^{-1} == 1
    expm1_over_x = const_series(
        [Fraction(1, factorial(m + 1)) for m in range(11)], 10)
    assert expm1_over_x * expm1_over_x.inverse() == TruncSeries.one(10)


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        one_minus_exp_x(4).inverse()
    with pytest.raises(ValueError):
        TruncSeries(3, [UniPoly([0, 1], "z")]).inverse()


def test_exp_zx():
    s = exp_zx(2)
    assert s.coefficient(0) == UniPoly([1], "z")
    assert s.coefficient(1) == UniPoly([0, 1], "z")
    assert s.coefficient(2) == UniPoly([0, 0, Fraction(1, 2)], "z")


def test_bernoulli_generating_function():
    # (x/(e^x-1)) e^{zx} has coefficients B_m(z)/m!
    s = x_over_expm1_pow(1, 8) * exp_zx(8)
    for m in range(9):
        assert factorial(m) * s.coefficient(m) == bernoulli_poly(m)


def test_poly_at_series():
    assert poly_at_series(UniPoly.variable("y"), exp_x(5)) == exp_x(5)
    # A_2(e^x) = e^{2x} + e^x summed by hand through x^4
    got = poly_at_series(UniPoly([0, 1, 1], "y"), exp_x(4))
    expected = const_series(
        [2, 3, Fraction(5, 2), Fraction(3, 2), Fraction(17, 24)], 4)
    assert got == expected
    assert poly_at_series(UniPoly([1], "y"), exp_x(3)) == TruncSeries.one(3)


def test_build_F_direct_k0_matches_bernoulli():
    f = build_F_direct(0, 6)
    for j in range(7):
        assert factorial(j) * f.coefficient(j) == bernoulli_poly(j)


def test_build_F_direct_small():
    f = build_F_direct(1, 2)
    assert f.coefficient(0) == UniPoly([1], "z")
    assert f.coefficient(1) == UniPoly((), "z")
    assert f.coefficient(2) == Fraction(-1, 2) * bernoulli_poly(2)
    f2 = build_F_direct(2, 6)
    assert not f2.coefficient(1)
    assert not f2.coefficient(2)


def test_build_F_eulerian_equals_direct():
    for k in (1, 2, 3):
        order = 6 * (k + 1) if k < 3 else 10
        assert build_F_eulerian(k, order) == build_F_direct(k, order)
    with pytest.raises(ValueError):
        build_F_eulerian(0, 4)


def test_build_G_identity():
    # 1 + x^k G_k(x,z) = F_k(x,z), assembled coefficientwise
    for k, order in ((0, 4), (2, 6)):
        g = build_G(k, order)
        assert not g.coefficient(0)
        coeffs = [UniPoly((), "z") for _ in range(order + 1)]
        coeffs[0] = UniPoly([1], "z")
        for m in range(order + 1 - k):
            coeffs[m + k] = coeffs[m + k] + g.coefficient(m)
        assert TruncSeries(order, coeffs) == build_F_direct(k, order)


def test_coefficient_extraction():
    assert exp_zx(5).coefficient(3) == UniPoly(
        [0, 0, 0, Fraction(1, 6)], "z")
    assert build_F_direct(1, 4).coefficient(0) == UniPoly([1], "z")
    # with n = 2, k = 1: k!^{n-1} [x^{(k+1)n-1}] F^n = S for the row below it
    f = build_F_direct(1, 4)
    coeff = (f ** 2).coefficient(3)
    z = UniPoly.variable("z")
    assert factorial(1) * coeff == (
        Fraction(-1, 3) * z * (z - 1) * (2 * z - 1))
    with pytest.raises(ValueError):
        exp_zx(3).coefficient(4)


def test_reflection_of_F():
    # coefficientwise: (-1)^m * [x^m]F_k(x, 1-z) == [x^m]F_k(x, z)
    for k in range(5):
        f = build_F_direct(k, 12)
        for m in range(13):
            c = f.coefficient(m)
            assert (-1) ** m * c.compose_affine(-1, 1) == c
