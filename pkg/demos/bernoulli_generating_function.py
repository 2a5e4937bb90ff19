"""A nonlinear equation for the Bernoulli-polynomial generating function.

F(x) = x*exp(t*x)/(exp(x) - 1) is a ratio of two solutions of linear
equations, but satisfies no linear equation itself.  arithmetic_dalg finds
the nonlinear equation satisfied by the ratio, and a truncated power series
of F checks it numerically in exact rational arithmetic.
"""

from fractions import Fraction

from dalg import (Context, SeriesWitness, TruncSeries, arithmetic_dalg,
                  equation_to_ade, render, spec_to_ratfunc, verify_series)


def bernoulli_series(t, T):
    """Coefficients of x*exp(t*x)/(exp(x) - 1) up to order T."""
    num = TruncSeries.x(T + 1) * TruncSeries.exponential(t, T + 1)
    den = TruncSeries.exponential(1, T + 1) - TruncSeries.const(1, T + 1)
    return (num / den).truncate(T)


def main():
    ctx = Context()
    # numerator x*exp(t*x) and denominator exp(x) - 1
    num = equation_to_ade("x*diff(y1(x),x) - (t*x + 1)*y1(x)", ctx)
    den = equation_to_ade("diff(y2(x),x) - y2(x) - 1", ctx)
    zname, ratio = spec_to_ratfunc("z = y1/y2", ctx, ["y1", "y2"])

    result = arithmetic_dalg([num, den], ratio, z_name=zname)
    print("equation for the ratio:")
    print("  " + render(result.ade, "text"))

    # check against the actual series at t = 1/2; the residual must vanish
    # to the full working precision
    T = 16
    coeffs = bernoulli_series(Fraction(1, 2), T).coeffs
    witness = SeriesWitness("z", coeffs, {"t": Fraction(1, 2)})
    val = verify_series(result.ade, witness, T)
    print(f"\nresidual valuation with the t=1/2 series, T={T}: {val}")
    print("series head:", coeffs[:5])


if __name__ == "__main__":
    main()
