"""Degree-bounded search as an alternative to elimination.

Instead of eliminating variables with a Groebner basis, ansatz_search posits
an equation of bounded degree in z, z', ..., solves for its unknown rational
coefficients by linear algebra, and returns the first one that works.  Lower
degree bounds give shorter equations of the same order; a high enough bound
recovers the elimination output.
"""

import time

from dalg import Context, ansatz_search, equation_to_ade, render, spec_to_ratfunc

WEIERSTRASS = "diff(y(x),x)^2 = 4*y(x)^3 - g2*y(x) - g3"


def main():
    for k in (2, 3, 4):
        ctx = Context()
        ade = equation_to_ade(WEIERSTRASS, ctx)
        zname, ratmap = spec_to_ratfunc("z = y/(x+y)", ctx, ["y"])
        t0 = time.monotonic()
        out = ansatz_search([ade], ratmap, k=k, z_name=zname)
        dt = time.monotonic() - t0
        print(f"\ndegree bound k={k}  ({dt:.1f}s, {out.poly.num_terms()} terms,"
              f" order {out.order})")
        print("  " + render(out, "text"))


if __name__ == "__main__":
    main()
