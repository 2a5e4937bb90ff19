"""Closure operations on the Weierstrass elliptic function.

The function satisfies (y')^2 = 4y^3 - g2*y - g3.  Starting from that single
equation we derive new equations for a rational expression in it, for its
composition with 2x, for its first and second derivatives, and for its
functional inverse.
"""

from dalg import (Context, compose_dalg, diff_dalg, equation_to_ade, inv_dalg,
                  render, spec_to_ratfunc, unary_dalg)

WEIERSTRASS = "diff(y1(x),x)^2 = 4*y1(x)^3 - g2*y1(x) - g3"


def show(title, ade):
    print(f"\n{title}")
    print("  " + render(ade, "text"))
    print(f"  order {ade.order}, total degree {ade.degree}")


def main():
    ctx = Context()
    ade = equation_to_ade(WEIERSTRASS, ctx)

    # a rational expression of the function is again differentially algebraic
    zname, ratmap = spec_to_ratfunc("z = y1/(x+y1)", ctx, ["y1"])
    show("z = y/(x+y):", unary_dalg(ade, ratmap, z_name=zname).ade)

    # composition with the inner function 2x (from y2' = 2): the duplication
    # z(x) = y(2x) satisfies a short second-order equation
    ctx2 = Context()
    outer = equation_to_ade(WEIERSTRASS, ctx2)
    inner = equation_to_ade("diff(y2(x),x) = 2", ctx2)
    show("z = y(2x):", compose_dalg(outer, inner).ade)

    # derivatives of solutions are differentially algebraic too
    ctx3 = Context()
    ade3 = equation_to_ade(WEIERSTRASS, ctx3)
    show("z = y':", diff_dalg(ade3, 1).ade)
    ctx4 = Context()
    ade4 = equation_to_ade(WEIERSTRASS, ctx4)
    show("z = y'':", diff_dalg(ade4, 2).ade)

    # the functional inverse comes out explicitly, with no elimination
    ctx5 = Context()
    ade5 = equation_to_ade(WEIERSTRASS, ctx5)
    show("z = inverse of y:", inv_dalg(ade5).ade)


if __name__ == "__main__":
    main()
