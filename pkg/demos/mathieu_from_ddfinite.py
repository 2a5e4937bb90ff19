"""From a linear equation with non-constant coefficients to a polynomial one.

Mathieu functions solve y'' + (a - 2q*cos(2x))*y = 0.  The coefficient
cos(2x) is itself the solution of C'' + 4C = 0, so the pair can be collapsed
into a single polynomial differential equation in y alone.
"""

from dalg import Context, ddfinite_to_dalg, equation_to_ade, render


def main():
    ctx = Context()
    main_eq = equation_to_ade("diff(y(x),x,x) + (a - 2*q*C)*y(x)", ctx,
                              dep="y", extra_deps=["y", "C"])
    coeff_eq = equation_to_ade("diff(C(x),x,x) + 4*C(x)", ctx)

    result = ddfinite_to_dalg(main_eq, [coeff_eq])
    print("polynomial equation for the Mathieu functions:")
    print("  " + render(result.ade, "text"))
    print(f"\norder {result.ade.order}, total degree {result.ade.degree};")
    print("the parameter q has been eliminated along with cos(2x)")


if __name__ == "__main__":
    main()
