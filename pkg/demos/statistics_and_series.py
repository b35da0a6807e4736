"""From permutation census to functional equations and closed forms.

The same joint distributions are computed three independent ways — direct
census, order-by-order solution of the defining functional equations, and
radical closed forms — and shown to agree coefficient by coefficient.

Run with ``python3 demos/statistics_and_series.py``.
"""

from sepstats import solve_fixpoint
from sepstats.closedforms import (
    closed_form_S_single,
    little_schroeder_gf,
    schroeder_gf,
)
from sepstats.distributions import series_from_enumeration


def main() -> None:
    order = 8

    print("== Route 1: census (one monomial per permutation) ==")
    census = series_from_enumeration(order)
    census_xy = census
    for var in ("p", "q", "u", "v"):
        census_xy = census_xy.specialize(var)
    print("  S(t,x,y) with x ~ left-to-right maxima, y ~ right-to-left maxima:")
    for n in range(1, 5):
        print(f"    t^{n}: {census_xy.coefficient(n)}")
    print()

    print("== Route 2: solving the functional equations ==")
    solved_xy, solved_irr = solve_fixpoint(order, ("x", "y"))
    agree = census_xy.first_difference(solved_xy, through=order) is None
    print(f"  fixpoint solution agrees with the census through order {order}:"
          f" {agree}")
    print("  the irreducible part starts:")
    for n in range(1, 4):
        print(f"    t^{n}: {solved_irr.coefficient(n)}")
    print()

    print("== Route 3: closed forms with exact radicals ==")
    s_gf = schroeder_gf(order)
    i_gf = little_schroeder_gf(order)
    print("  counting series from (1 - t - sqrt(1 - 6t + t^2)) / 2:")
    print(f"    {[s_gf.coefficient(n).constant_term() for n in range(1, order + 1)]}")
    print("  irreducible counting series from (1 + t - sqrt(1 - 6t + t^2)) / 4:")
    print(f"    {[i_gf.coefficient(n).constant_term() for n in range(1, order + 1)]}")
    single = closed_form_S_single(order, "rmax")
    census_y = census_xy.specialize("x")
    agree = single.first_difference(census_y, through=order) is None
    print(
        "  two-radical closed form for the rmax distribution matches the "
        f"census through order {order}: {agree}"
    )
    print("  its first coefficients:")
    for n in range(1, 5):
        print(f"    t^{n}: {single.coefficient(n)}")


if __name__ == "__main__":
    main()
