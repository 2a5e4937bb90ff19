"""Truncated power series arithmetic and the residual oracle."""

import math
from fractions import Fraction

import pytest

from dalg import (Context, SeriesWitness, TruncSeries, equation_to_ade,
                  verify_series)
from dalg.errors import ArgumentError, DivisionByZeroError


def test_series_constructors():
    e = TruncSeries.exponential(1, 6)
    # [TRIVIAL] 1, 1, 1/2, 1/6, 1/24, 1/120
    assert e.coeffs == [Fraction(1), Fraction(1), Fraction(1, 2),
                        Fraction(1, 6), Fraction(1, 24), Fraction(1, 120)]
    assert TruncSeries.const(3, 4).coeffs == [3, 0, 0, 0]
    assert TruncSeries.x(3).coeffs == [0, 1, 0]


def test_series_mul_is_exponential_addition():
    # [DERIVED] exp(x) * exp(2x) = exp(3x)
    a = TruncSeries.exponential(1, 10)
    b = TruncSeries.exponential(2, 10)
    c = TruncSeries.exponential(3, 10)
    assert (a * b).coeffs == c.coeffs


def test_series_division_geometric():
    # [DERIVED] 1/(1-x) = 1 + x + x^2 + ...
    one = TruncSeries.const(1, 8)
    d = one - TruncSeries.x(8)
    q = one / d
    assert q.coeffs == [Fraction(1)] * 8
    # division shifts out a common valuation: x^2 / x = x
    x = TruncSeries.x(8)
    assert (x * x / x).coeffs[:3] == [0, 1, 0]
    with pytest.raises(ArgumentError):
        _ = one / x
    with pytest.raises(DivisionByZeroError):
        _ = one / TruncSeries.const(0, 8)


def test_series_derivative_and_valuation():
    e = TruncSeries.exponential(1, 8)
    assert e.derivative().coeffs == e.coeffs[:7]
    assert TruncSeries.x(5).valuation() == 1
    assert TruncSeries.const(0, 5).valuation() == math.inf
    assert (e - e).valuation() == math.inf


def test_verify_series_exponential():
    ctx = Context()
    ade = equation_to_ade("diff(z(x),x) = z(x)", ctx)
    good = SeriesWitness("z", TruncSeries.exponential(1, 12).coeffs)
    assert verify_series(ade, good, 12) == math.inf
    # a wrong witness is caught with a small valuation
    bad = SeriesWitness("z", TruncSeries.exponential(2, 12).coeffs)
    assert verify_series(ade, bad, 12) <= 2


def test_verify_series_with_parameters():
    ctx = Context()
    ade = equation_to_ade("diff(z(x),x) = a*z(x)", ctx)
    wit = SeriesWitness("z", TruncSeries.exponential(3, 12).coeffs, {"a": 3})
    assert verify_series(ade, wit, 12) == math.inf
    with pytest.raises(ArgumentError):
        verify_series(ade, SeriesWitness("z", wit.coeffs), 12)


def test_verify_series_argument_checks():
    ctx = Context()
    ade = equation_to_ade("diff(z(x),x) = z(x)", ctx)
    wit = SeriesWitness("z", TruncSeries.exponential(1, 12).coeffs)
    with pytest.raises(ArgumentError):
        verify_series(ade, wit, 2)
    with pytest.raises(ArgumentError):
        verify_series(ade, SeriesWitness("z", [1, 1]), 12)


def bernoulli_series(t, T):
    """x*exp(t*x)/(exp(x) - 1): generating function of Bernoulli polynomials."""
    num = TruncSeries.x(T + 1) * TruncSeries.exponential(t, T + 1)
    den = TruncSeries.exponential(1, T + 1) - TruncSeries.const(1, T + 1)
    return (num / den).truncate(T)


def test_bernoulli_series_values():
    # [DERIVED] coefficients are B_n(t)/n!; at t=0: B_0=1, B_1=-1/2, B_2=1/6
    s = bernoulli_series(Fraction(0), 6)
    assert s.coeffs[0] == 1
    assert s.coeffs[1] == Fraction(-1, 2)
    assert s.coeffs[2] == Fraction(1, 12)  # B_2/2! = (1/6)/2
    # at t=1/2 the odd Bernoulli polynomials vanish
    s2 = bernoulli_series(Fraction(1, 2), 6)
    assert s2.coeffs[1] == 0
    assert s2.coeffs[3] == 0
