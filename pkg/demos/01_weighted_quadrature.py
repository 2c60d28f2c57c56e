"""Composite Gauss-Legendre quadrature with a weight, the workhorse
behind every inner product in the package.

Shows exactness on polynomials, convergence on a smooth integrand,
and how the oscillation helper picks panel counts for e^{ixt}.
"""

import math

import numpy as np

from rkhskit import (
    build_grid,
    inner_weighted,
    integrate,
    make_interval,
    norm_weighted,
    panels_for_oscillation,
    sample,
)


def main():
    iv = make_interval(0.0, 1.0)

    # 16-node Gauss panels integrate degree <= 31 exactly; one panel is enough
    grid = build_grid(iv, panels=1, nodes_per_panel=16)
    val = integrate(grid, grid.nodes ** 7)
    print(f"int_0^1 t^7 dt       = {val.real:.16f}  (exact 0.125)")

    # weighted inner product <f, g> = int f conj(g) rho dt with rho = 1 + t
    grid_w = build_grid(iv, panels=4, nodes_per_panel=16, rho=lambda t: 1.0 + t)
    f = sample(grid_w, lambda t: np.ones_like(t))
    g = sample(grid_w, lambda t: t)
    print(f"<1, t> with rho=1+t  = {inner_weighted(f, g).real:.16f}  (exact 5/6 = {5/6:.16f})")
    print(f"||1|| with rho=1+t   = {norm_weighted(f):.16f}  (exact sqrt(3/2) = {math.sqrt(1.5):.16f})")

    # convergence on int_0^1 e^t dt as panels double
    exact = math.e - 1.0
    print("\npanels   |error| for int_0^1 e^t dt")
    for panels in (1, 2, 4):
        g2 = build_grid(iv, panels=panels, nodes_per_panel=4)
        err = abs(integrate(g2, np.exp(g2.nodes)).real - exact)
        print(f"{panels:6d}   {err:.3e}")

    # oscillatory integrands need panels proportional to the phase rate
    print("\nrate     panels   |int_0^1 cos(rate*t) dt - sin(rate)/rate|")
    for rate in (10.0, 100.0, 1000.0):
        panels = panels_for_oscillation(1.0, rate, minimum=4)
        g3 = build_grid(iv, panels=panels, nodes_per_panel=8)
        err = abs(integrate(g3, np.cos(rate * g3.nodes)).real - math.sin(rate) / rate)
        print(f"{rate:6.0f}   {panels:6d}   {err:.3e}")


if __name__ == "__main__":
    main()
