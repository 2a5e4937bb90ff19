"""Differential polynomial structure on top of the plain polynomial ring.

Provides the total derivation d/dx (x -> 1, parameters -> 0,
y_j^(k) -> y_j^(k+1), extended by linearity and Leibniz), rational
functions as quotients of polynomials, normalized algebraic differential
equations with leader/initial/separant data, and the implicit rewriting of
higher derivatives of a dependent variable as rational functions of its
first n derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .context import DIFF, INDEP, Var, same_context
from .errors import (ArgumentError, DegeneracyError, DivisionByZeroError)
from .poly import Poly, content_primitive, poly_gcd, try_exact_divide


def total_derivative(f: Poly) -> Poly:
    """Total derivation: D(x)=1, D(param)=0, D(y_j^(k)) = y_j^(k+1)."""
    ctx = f.ctx
    out = Poly(ctx)
    for mono, c in f.terms.items():
        for i, (idx, e) in enumerate(mono):
            var = ctx.var_by_index(idx)
            if var.kind == INDEP:
                dv = Poly.const(ctx, 1)
            elif var.kind == DIFF:
                dv = Poly.var(ctx, ctx.diff_var(var.indet, var.order + 1))
            else:
                continue
            if e > 1:
                rest = mono[:i] + ((idx, e - 1),) + mono[i + 1:]
            else:
                rest = mono[:i] + mono[i + 1:]
            out = out + dv * Poly(ctx, {rest: c * e})
    return out


class RatFunc:
    """Reduced quotient of two polynomials; the denominator is primitive
    with positive leading coefficient and coprime to the numerator.
    Equality is tested by cross-multiplication."""

    __slots__ = ("num", "den", "ctx")

    def __init__(self, num: Poly, den: Poly | None = None):
        den = den if den is not None else Poly.const(num.ctx, 1)
        same_context(num, den)
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        if num.is_zero():
            den = Poly.const(num.ctx, 1)
        else:
            if not den.is_constant():
                quo = try_exact_divide(num, den)
                if quo is not None:
                    num, den = quo, Poly.const(num.ctx, 1)
                else:
                    g = poly_gcd(num, den)
                    if not g.is_constant():
                        num = try_exact_divide(num, g)
                        den = try_exact_divide(den, g)
            c_den, den = content_primitive(den)
            num = num.scale(1 / c_den)
        self.num = num
        self.den = den
        self.ctx = num.ctx

    @classmethod
    def of(cls, value, ctx=None) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return cls(value)
        return cls(Poly.const(ctx, value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        other = RatFunc.of(other, self.ctx)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        return self + (-RatFunc.of(other, self.ctx))

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num.scale(other), self.den)
        other = RatFunc.of(other, self.ctx)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.of(other, self.ctx)
        if other.is_zero():
            raise DivisionByZeroError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, exp: int):
        if exp < 0:
            return RatFunc(self.den ** (-exp), self.num ** (-exp))
        return RatFunc(self.num ** exp, self.den ** exp)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.of(other, self.ctx)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc is unhashable")

    def __repr__(self):
        if self.is_polynomial():
            c = self.den.constant_value()
            return repr(self.num.scale(1 / c)) if c != 1 else repr(self.num)
        return f"({self.num!r})/({self.den!r})"

    def derivative(self) -> "RatFunc":
        """Total derivative by the quotient rule."""
        if self.is_polynomial():
            c = self.den.constant_value()
            return RatFunc(total_derivative(self.num).scale(1 / c))
        return RatFunc(
            total_derivative(self.num) * self.den - self.num * total_derivative(self.den),
            self.den * self.den,
        )


def rational_substitute(f: RatFunc, bindings: dict) -> RatFunc:
    """Simultaneous substitution Var -> RatFunc; unbound variables pass through."""
    bindings = {v: RatFunc.of(r, f.ctx) for v, r in bindings.items()}
    num = _poly_substitute_rat(f.num, bindings)
    den = _poly_substitute_rat(f.den, bindings)
    if den.is_zero():
        raise DivisionByZeroError("substitution produced a zero denominator")
    return num / den


def _poly_substitute_rat(p: Poly, bindings: dict) -> RatFunc:
    ctx = p.ctx
    by_index = {v.index: r for v, r in bindings.items()}
    if not any(idx in by_index for mono in p.terms for idx, _ in mono):
        return RatFunc(p)
    powers: dict = {}

    def power(idx, e):
        cached = powers.get((idx, e))
        if cached is None:
            cached = powers[(idx, e)] = by_index[idx] ** e
        return cached

    total = RatFunc(Poly(ctx))
    for mono, c in p.terms.items():
        plain = []
        factor = None
        for idx, e in mono:
            if idx in by_index:
                f = power(idx, e)
                factor = f if factor is None else factor * f
            else:
                plain.append((idx, e))
        term = RatFunc(Poly(ctx, {tuple(plain): c}))
        if factor is not None:
            term = term * factor
        total = total + term
    return total


@dataclass(eq=False)
class ADE:
    """A normalized algebraic differential equation P = 0 in one dependent
    variable, with cached leader, initial, and separant."""

    ctx: object
    poly: Poly
    dep: int                     # indeterminate id of the dependent variable
    order: int
    leader: Var
    leader_degree: int
    initial: Poly
    separant: Poly
    _implicit: dict = field(default_factory=dict, repr=False)

    def __eq__(self, other):
        return (isinstance(other, ADE) and self.poly == other.poly
                and self.dep == other.dep)

    @property
    def dep_name(self) -> str:
        return self.ctx.indet_name(self.dep)

    @property
    def degree(self) -> int:
        return self.poly.total_degree()

    def __repr__(self):
        from .render import render

        return render(self, "text")


def normalize_ade(lhs, rhs=None, dep=None, ctx=None) -> ADE:
    """Clear denominators of lhs = rhs, normalize to a primitive polynomial,
    and compute order, leader, leader degree, initial, and separant."""
    if isinstance(lhs, Poly) and ctx is None:
        ctx = lhs.ctx
    elif isinstance(lhs, RatFunc) and ctx is None:
        ctx = lhs.ctx
    lhs = RatFunc.of(lhs, ctx)
    diff = lhs - RatFunc.of(rhs if rhs is not None else 0, ctx)
    poly = diff.num
    if poly.is_zero():
        raise ArgumentError("equation is identically zero")
    if dep is None:
        deps = sorted({v.indet for v in poly.variables() if v.kind == DIFF})
        if len(deps) != 1:
            raise ArgumentError(
                "dependent variable is ambiguous; pass dep explicitly"
            )
        dep = deps[0]
    orders = [v.order for v in poly.variables() if v.kind == DIFF and v.indet == dep]
    if not orders:
        raise ArgumentError("equation does not involve the dependent variable")
    n = max(orders)
    leader = ctx.diff_var(dep, n)
    poly = content_primitive(poly)[1]
    m = poly.degree(leader)
    initial = poly.coeff_in(leader, m)
    separant = poly.partial_derivative(leader)
    return ADE(ctx, poly, dep, n, leader, m, initial, separant)


def implicit_higher_derivative(ade: ADE, t: int) -> RatFunc:
    """Express y^(n+t) as a rational function of x, parameters, and
    y, ..., y^(n); the denominator is a power of the separant."""
    if t < 1:
        raise ArgumentError("t must be positive")
    cached = ade._implicit.get(t)
    if cached is not None:
        return cached
    ctx = ade.ctx
    if ade.separant.is_zero():
        raise DegeneracyError("separant vanishes identically")
    top = ctx.diff_var(ade.dep, ade.order + 1)
    if 1 not in ade._implicit:
        dp = total_derivative(ade.poly)
        rest = dp - ade.separant * Poly.var(ctx, top)
        if rest.has_var(top):
            raise DegeneracyError("prolongation is not linear in the top derivative")
        ade._implicit[1] = RatFunc(-rest, ade.separant)
    first = ade._implicit[1]
    for step in range(2, t + 1):
        if step in ade._implicit:
            continue
        prev = ade._implicit[step - 1]
        ade._implicit[step] = rational_substitute(prev.derivative(), {top: first})
    return ade._implicit[t]
