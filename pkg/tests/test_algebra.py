"""Tests for the exact-arithmetic substrate."""

import math
import random
from fractions import Fraction

import pytest

from rbell.algebra import (
    ApproxReal,
    IntPolynomial,
    RationalSeries,
    falling_factorial_poly,
    fraction_free_det,
    pochhammer,
    series_exp,
    squarefree_part,
    sturm_root_count,
)
from rbell.errors import DomainError, InconsistencyError


def test_polynomial_canonical_form():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    zero = IntPolynomial([0, 0])
    assert zero.coeffs == ()
    assert zero.degree == -1
    assert zero.is_zero()
    assert not zero
    assert IntPolynomial([3])


def test_polynomial_rejects_non_integers():
    with pytest.raises(DomainError):
        IntPolynomial([1, Fraction(1, 2)])
    with pytest.raises(DomainError):
        IntPolynomial([True])
    with pytest.raises(DomainError):
        IntPolynomial([1.0])


def test_polynomial_is_immutable():
    p = IntPolynomial([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (5,)
    assert hash(p) == hash(IntPolynomial([1, 2]))


def test_polynomial_arithmetic_examples():
    p = IntPolynomial([1, 1])
    q = IntPolynomial([-1, 1])
    assert p + q == IntPolynomial([0, 2])
    assert p - q == IntPolynomial([2])
    assert p * q == IntPolynomial([-1, 0, 1])
    assert (p**3).coeffs == (1, 3, 3, 1)
    assert 2 * p == IntPolynomial([2, 2])
    assert p + 1 == IntPolynomial([2, 1])
    assert 1 - p == IntPolynomial([0, -1])
    assert IntPolynomial.monomial(3, 4).coeffs == (0, 0, 0, 4)


def test_polynomial_pow_rejects_negative_exponent():
    with pytest.raises(DomainError):
        IntPolynomial([0, 1]) ** -1


def test_polynomial_evaluation_and_calculus():
    p = IntPolynomial([4, 5, 1])
    assert p(0) == 4
    assert p(1) == 10
    assert p(Fraction(1, 2)) == Fraction(27, 4)
    assert p.derivative() == IntPolynomial([5, 2])
    assert IntPolynomial([0, 4, 5, 1]).divide_by_x() == p
    with pytest.raises(InconsistencyError):
        p.divide_by_x()


def test_polynomial_accessors():
    p = IntPolynomial([4, 5, 1])
    assert p.constant_term == 4
    assert p.leading_coefficient == 1
    assert p.coefficient(1) == 5
    assert p.coefficient(9) == 0
    assert p.coefficient(-1) == 0


def test_polynomial_random_ring_axioms():
    rng = random.Random(20240817)

    def rand_poly():
        deg = rng.randrange(0, 13)
        return IntPolynomial([rng.randint(-50, 50) for _ in range(deg + 1)])

    for _ in range(200):
        p, q = rand_poly(), rand_poly()
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert (p + q)(x) == p(x) + q(x)
        assert (p * q)(x) == p(x) * q(x)
        assert (p - q) + q == p
        if p and q:
            assert (p * q).degree == p.degree + q.degree


def test_series_build_and_validation():
    s = RationalSeries.build([1, 2], order=3)
    assert s.coeffs == (Fraction(1), Fraction(2), Fraction(0), Fraction(0))
    with pytest.raises(DomainError):
        RationalSeries(2, (Fraction(1),))
    with pytest.raises(DomainError):
        RationalSeries(-1, ())
    with pytest.raises(DomainError):
        RationalSeries.build([], order=None)


def test_series_arithmetic_truncates():
    a = RationalSeries.build([1, 1, 1, 1])
    b = RationalSeries.build([1, -1], order=1)
    assert (a + b).order == 1
    assert (a + b).coeffs == (Fraction(2), Fraction(0))
    assert (a * b).coeffs == (Fraction(1), Fraction(0))
    c = RationalSeries.build([0, 1, 0, 0])
    assert (a * c).coeffs == (Fraction(0), Fraction(1), Fraction(1), Fraction(1))
    assert (a - a).coeffs == (Fraction(0),) * 4


def test_series_exp_of_z():
    f = RationalSeries.build([0, 1], order=3)
    g = series_exp(f)
    assert g.coeffs == (Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 6))


def test_series_exp_requires_zero_constant():
    with pytest.raises(DomainError):
        series_exp(RationalSeries.build([1, 1], order=2))


def test_series_exp_multiplicativity():
    rng = random.Random(7)
    for _ in range(25):
        order = rng.randrange(1, 11)
        f = RationalSeries.build(
            [0] + [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order)]
        )
        g = RationalSeries.build(
            [0] + [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order)]
        )
        assert series_exp(f + g).coeffs == (series_exp(f) * series_exp(g)).coeffs


def test_approx_real_contract():
    a = ApproxReal(1.5, 0.25)
    assert a.encloses(Fraction(3, 2))
    assert a.encloses(Fraction(7, 4))
    assert not a.encloses(2)
    with pytest.raises(DomainError):
        ApproxReal(1.0, -1e-9)
    with pytest.raises(DomainError):
        ApproxReal(math.inf, 0.0)
    with pytest.raises(DomainError):
        ApproxReal(0.0, math.nan)


def test_pochhammer_values():
    assert pochhammer(5, 0) == 1
    assert pochhammer(1, 6) == 720
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(-3, 5) == 0
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_falling_factorial_poly():
    assert falling_factorial_poly(0) == IntPolynomial([1])
    assert falling_factorial_poly(3).coeffs == (0, 2, -3, 1)
    with pytest.raises(DomainError):
        falling_factorial_poly(-2)


def test_falling_rising_duality():
    # x(x-1)...(x-n+1) = (-1)^n (-x)(-x+1)...(-x+n-1)
    rng = random.Random(99)
    for n in range(0, 8):
        p = falling_factorial_poly(n)
        for _ in range(5):
            x = Fraction(rng.randint(-12, 12), rng.randint(1, 5))
            assert p(x) == (-1) ** n * pochhammer(-x, n)


def test_determinant_examples():
    assert fraction_free_det([[1, 3], [3, 10]]) == 1
    assert fraction_free_det([[2]]) == 2
    assert fraction_free_det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert fraction_free_det([[0, 1], [1, 0]]) == -1
    assert fraction_free_det([[1, 2], [2, 4]]) == 0
    with pytest.raises(DomainError):
        fraction_free_det([[1, 2], [3]])
    with pytest.raises(DomainError):
        fraction_free_det([])


def test_determinant_polynomial_entries():
    x = IntPolynomial([0, 1])
    det = fraction_free_det([[1, x + 2], [x + 2, x * x + 5 * x + 4]])
    assert det == x
    # singular polynomial matrix
    zero = fraction_free_det([[x, x], [x, x]])
    assert zero == IntPolynomial()


def test_determinant_random_cross_check():
    # Bareiss on the int matrix must agree with cofactor expansion, which is
    # forced by wrapping one entry as a constant polynomial.
    rng = random.Random(321)
    for _ in range(60):
        n = rng.randrange(1, 6)
        m = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        wrapped = [row[:] for row in m]
        wrapped[0][0] = IntPolynomial([m[0][0]])
        assert fraction_free_det(wrapped) == fraction_free_det(m)


def test_squarefree_part():
    x = IntPolynomial([0, 1])
    p = (x + 1) ** 2 * (x + 2)
    assert squarefree_part(p) == (x + 1) * (x + 2)
    assert squarefree_part(x + 3) == x + 3
    assert squarefree_part(-2 * (x + 1) ** 3) == x + 1
    with pytest.raises(DomainError):
        squarefree_part(IntPolynomial())


def test_sturm_examples():
    x = IntPolynomial([0, 1])
    assert sturm_root_count(IntPolynomial([4, 5, 1]), -math.inf, 0) == 2
    assert sturm_root_count(IntPolynomial([1, 0, 1]), -math.inf, math.inf) == 0
    assert sturm_root_count(IntPolynomial([1, 7, 6, 1]), -math.inf, 0) == 3
    # half-open (lo, hi]: the root at 0 belongs to intervals with hi >= 0
    assert sturm_root_count(x, -1, 0) == 1
    assert sturm_root_count(x, 0, 5) == 0
    # multiple roots count once
    assert sturm_root_count((x - 2) ** 3, 0, 4) == 1
    assert sturm_root_count(IntPolynomial([5]), -math.inf, math.inf) == 0


def test_sturm_validation():
    p = IntPolynomial([0, 1])
    with pytest.raises(DomainError):
        sturm_root_count(IntPolynomial(), 0, 1)
    with pytest.raises(DomainError):
        sturm_root_count(p, 1, 1)
    with pytest.raises(DomainError):
        sturm_root_count(p, 2, 1)
    with pytest.raises(DomainError):
        sturm_root_count(p, 0.5, 1)


def test_sturm_random_known_roots():
    rng = random.Random(4242)
    for _ in range(80):
        k = rng.randrange(2, 5)
        roots = rng.sample(range(-20, 21), k)
        p = IntPolynomial([1])
        for a in roots:
            p = p * IntPolynomial([-a, 1])
        lo = Fraction(rng.randint(-44, 20), 2)
        hi = lo + Fraction(rng.randint(1, 50), 2)
        expected = sum(1 for a in roots if lo < a <= hi)
        assert sturm_root_count(p, lo, hi) == expected
