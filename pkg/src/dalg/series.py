"""Truncated power series with exact coefficients, and the residual oracle.

The oracle substitutes a truncated series solution (and its formal
derivatives) into an equation and reports the x-adic valuation of the
residual.  A genuine solution gives residual zero to the available
precision; a non-solution is detected by a small finite valuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .context import DIFF, INDEP
from .errors import ArgumentError, DivisionByZeroError


class TruncSeries:
    """A power series known up to (but not including) x**len(coeffs)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [Fraction(c) for c in coeffs]

    @classmethod
    def const(cls, value, precision):
        out = [Fraction(0)] * precision
        if precision:
            out[0] = Fraction(value)
        return cls(out)

    @classmethod
    def x(cls, precision):
        out = [Fraction(0)] * precision
        if precision > 1:
            out[1] = Fraction(1)
        return cls(out)

    @classmethod
    def exponential(cls, rate, precision):
        """Series of exp(rate * x)."""
        out, c = [], Fraction(1)
        for i in range(precision):
            out.append(c)
            c = c * Fraction(rate) / (i + 1)
        return cls(out)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def truncate(self, precision) -> "TruncSeries":
        return TruncSeries(self.coeffs[:precision])

    def valuation(self):
        """Index of the first nonzero coefficient, or +inf if none known."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def __add__(self, other):
        n = min(self.precision, other.precision)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other):
        n = min(self.precision, other.precision)
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs])
        n = min(self.precision, other.precision)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                out[i + j] += a * b
        return TruncSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ArgumentError("negative power of a truncated series")
        result = TruncSeries.const(1, self.precision)
        for _ in range(exp):
            result = result * self
        return result

    def __truediv__(self, other):
        """Division, shifting out a common valuation when the divisor
        vanishes at 0."""
        v = other.valuation()
        if v is math.inf:
            raise DivisionByZeroError("division by a zero series")
        if v:
            if self.valuation() < v:
                raise ArgumentError("quotient is not a power series")
            a = self.coeffs[v:]
            b = other.coeffs[v:]
        else:
            a, b = list(self.coeffs), list(other.coeffs)
        n = min(len(a), len(b))
        out = []
        for i in range(n):
            c = a[i] - sum(out[j] * b[i - j] for j in range(i))
            out.append(c / b[0])
        return TruncSeries(out)

    def derivative(self):
        return TruncSeries([i * c for i, c in enumerate(self.coeffs)][1:])


@dataclass
class SeriesWitness:
    """A truncated solution: coefficients of the dependent plus numeric
    values for every parameter."""

    dep_name: str
    coeffs: list
    params: dict = field(default_factory=dict)


def verify_series(ade, witness: SeriesWitness, T: int):
    """Substitute the witness into the equation; return the x-adic valuation
    of the residual, or +inf when it vanishes to precision T - order."""
    if T < ade.order + 2:
        raise ArgumentError("truncation must exceed the order by at least 2")
    if len(witness.coeffs) < T:
        raise ArgumentError("witness is shorter than the requested truncation")
    ctx = ade.ctx
    prec = T - ade.order
    base = TruncSeries(witness.coeffs[:T])
    derivs = [base]
    for _ in range(ade.order):
        derivs.append(derivs[-1].derivative())

    def series_for(var):
        if var.kind == INDEP:
            return TruncSeries.x(prec)
        if var.kind == DIFF:
            if ctx.indet_name(var.indet) != witness.dep_name or var.order > ade.order:
                raise ArgumentError(f"no witness data for {var!r}")
            return derivs[var.order].truncate(prec)
        value = witness.params.get(var.name)
        if value is None:
            raise ArgumentError(f"parameter {var.name!r} is unbound")
        return TruncSeries.const(value, prec)

    residual = TruncSeries.const(0, prec)
    cache = {}
    for mono, coeff in ade.poly.terms.items():
        term = TruncSeries.const(coeff, prec)
        for idx, e in mono:
            s = cache.get(idx)
            if s is None:
                s = cache[idx] = series_for(ctx.var_by_index(idx))
            term = term * s ** e
        residual = residual + term
    return residual.valuation()
