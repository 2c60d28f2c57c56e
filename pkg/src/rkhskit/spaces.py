"""Concrete Hilbert-space families and their kernels.

Two families carry most of the weight: first-order weighted Sobolev spaces
on an interval (members vanish at an anchor point, the norm is the weighted
L2 norm of the derivative) and bandlimited spaces with the sine-quotient
kernel.  Tensor products of feature maps close the set under products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .numerics import (
    HVector,
    Interval,
    QuadGrid,
    build_grid,
    cumulative_integral,
    derivative_values,
    inner_weighted,
    integrate,
    make_interval,
    med3,
    panels_for_oscillation,
    truncate_line,
)
from .transforms import FeatureMap

__all__ = [
    "RHO_REGISTRY",
    "SobolevSpace",
    "PaleyWienerSpace",
    "sinc_ratio",
    "SincIdentityReport",
    "sinc_identity_check",
    "ProductGrid",
    "product_grid",
    "tensor_feature",
    "tensor_kernel",
    "PRODUCT_NODE_CAP",
]

RHO_REGISTRY: dict[str, Callable] = {
    "const": lambda t: np.ones_like(np.asarray(t, dtype=float)),
    "affine": lambda t: 1.0 + np.asarray(t, dtype=float),
}


class SobolevSpace:
    """Absolutely continuous functions vanishing at an anchor c, with
    derivative in the rho-weighted L2 space of a finite open interval.

    The kernel at (x, y) is the integral of 1/rho over the interval from c
    to the median of {x, y, c}; features are the scaled indicators
    chi_(c,x)/rho, so kernel values, transforms, and evaluations are all
    small quadratures.  Integrability of 1/rho toward c is checked at grid
    resolution only: a weight that fails it shows up as kernel values that
    keep growing under grid refinement rather than as a constructor error.
    """

    def __init__(
        self,
        interval: Interval,
        c: float,
        rho: Callable | None = None,
        *,
        panels: int = 32,
        nodes_per_panel: int = 16,
    ) -> None:
        if interval.empty or not interval.finite:
            raise ValueError("need a finite nonempty interval; truncate first")
        if not (math.isfinite(c) and interval.lo <= c <= interval.hi):
            raise ValueError("anchor c must be finite and lie in the closed interval")
        self.interval = interval
        self.c = float(c)
        self.rho = RHO_REGISTRY["const"] if rho is None else rho
        self.panels = int(panels)
        self.nodes_per_panel = int(nodes_per_panel)
        self.grid = build_grid(interval, panels, nodes_per_panel, self.rho, breakpoints=(self.c,))
        if not np.all(np.isfinite(1.0 / self.grid.rho_at_nodes)):
            raise ValueError("invalid weight function")

    def _require_point(self, x: float) -> float:
        x = float(x)
        if not (self.interval.lo <= x <= self.interval.hi):
            raise ValueError("point outside the interval")
        return x

    def kernel(self, x: float, y: float, *, panels: int = 8, nodes_per_panel: int = 16) -> float:
        """Kernel value by quadrature of 1/rho over (c, med{x, y, c}).

        Endpoint arguments are allowed and mean the continuous extension.
        """
        x = self._require_point(x)
        y = self._require_point(y)
        seg = make_interval(self.c, med3(x, y, self.c))
        if seg.empty:
            return 0.0
        g = build_grid(seg, panels, nodes_per_panel)
        vals = 1.0 / np.asarray(self.rho(g.nodes), dtype=float)
        return float(integrate(g, vals).real)

    def _feature_values(self, x, grid: QuadGrid) -> np.ndarray:
        x = self._require_point(x)
        lo, hi = min(self.c, x), max(self.c, x)
        ind = (grid.nodes > lo) & (grid.nodes < hi)
        return np.where(ind, 1.0 / grid.rho_at_nodes, 0.0).astype(complex)

    def feature_map(
        self,
        points: Sequence[float] = (),
        *,
        panels: int | None = None,
        nodes_per_panel: int | None = None,
    ) -> FeatureMap:
        """Feature map phi(x) = chi_(c,x)/rho on a grid with panel breaks at c
        and at every declared point.

        Kernels and transforms between declared points are then panel-exact;
        undeclared points pick up an O(panel width) indicator error, so
        declare every point that accuracy depends on.
        """
        pts = tuple(self._require_point(p) for p in points)
        g = build_grid(
            self.interval,
            panels or self.panels,
            nodes_per_panel or self.nodes_per_panel,
            self.rho,
            breakpoints=(self.c, *pts),
        )
        return FeatureMap(
            domain_label=f"({self.interval.lo:g}, {self.interval.hi:g}) anchored at {self.c:g}",
            grid=g,
            evaluate=lambda x: self._feature_values(x, g),
            closed_kernel=lambda x, y: complex(self.kernel(x, y)),
        )

    def feature(self, x: float) -> HVector:
        """One-off feature vector on a grid with breaks at c and x."""
        fm = self.feature_map((x,))
        return fm.feature(x)

    def kernel_section_slope(self, y: float, grid: QuadGrid) -> HVector:
        """Derivative representative of the kernel section at y:
        sign(y - c) * chi_(c,y)/rho.

        Pairing a member's derivative samples with this under the weighted
        inner product evaluates the member at y.
        """
        sgn = 1.0 if y >= self.c else -1.0
        return HVector(grid, sgn * self._feature_values(y, grid))

    def indefinite_transform(self, f: HVector) -> Callable:
        """Transform of an L2 vector into this space: x maps to the integral
        of f over the set between c and x (nonnegative orientation on both
        sides of c)."""
        F = self._primitive(f)

        def fhat(x):
            xs = np.asarray(x, dtype=float)
            out = np.atleast_1d(F(np.atleast_1d(xs)))
            flip = np.atleast_1d(xs) < self.c
            out = np.where(flip, -out, out)
            return complex(out[0]) if xs.ndim == 0 else out

        return fhat

    def oriented_integral(self, f: HVector) -> Callable:
        """Plain signed primitive x maps to integral from c to x of f."""
        return self._primitive(f)

    def _primitive(self, f: HVector) -> Callable:
        if not (f.grid.interval.lo == self.interval.lo and f.grid.interval.hi == self.interval.hi):
            raise ValueError("vector must live on a grid over the space's interval")
        F0 = cumulative_integral(f.grid, f.values)
        Fc = F0(self.c)
        return lambda x: F0(x) - Fc

    def inner_from_samples(self, u: HVector, v: HVector) -> complex:
        """Space inner product of two members given by node samples.

        Differentiates the per-panel interpolants spectrally and pairs the
        derivatives under the weighted inner product; the grid must carry
        this space's weight.
        """
        du = HVector(u.grid, derivative_values(u.grid, u.values))
        dv = HVector(v.grid, derivative_values(v.grid, v.values))
        return inner_weighted(du, dv)

    def norm_from_samples(self, u: HVector) -> float:
        return math.sqrt(max(self.inner_from_samples(u, u).real, 0.0))


class PaleyWienerSpace:
    """Bandlimited functions: the image of the windowed oscillatory transform
    on L2(-a, a), with kernel sin(a(x - conj(y))) / (pi (x - conj(y))).
    """

    def __init__(
        self,
        a: float,
        *,
        max_frequency: float = 40.0,
        nodes_per_panel: int = 16,
        min_panels: int = 8,
    ) -> None:
        if not (math.isfinite(a) and a > 0):
            raise ValueError("half-width a must be positive and finite")
        self.a = float(a)
        self.max_frequency = float(max_frequency)
        panels = panels_for_oscillation(2.0 * self.a, self.max_frequency, minimum=min_panels)
        self.grid = build_grid(make_interval(-self.a, self.a), panels, nodes_per_panel)

    def kernel(self, x, y) -> complex:
        """Closed-form kernel; accepts complex arguments."""
        d = complex(x) - complex(y).conjugate()
        z = self.a * d
        if abs(d) < 1e-4:
            # Taylor branch through the removable singularity at x = conj(y)
            return (self.a / math.pi) * (1.0 - z * z / 6.0 + z ** 4 / 120.0)
        return complex(np.sin(z) / (math.pi * d))

    def _feature_values(self, x) -> np.ndarray:
        x = complex(x)
        if x.imag != 0.0:
            raise ValueError("complex evaluation via closed form only")
        if abs(x.real) > self.max_frequency:
            raise ValueError(
                "frequency beyond declared grid resolution; rebuild with larger max_frequency"
            )
        return np.exp(1j * self.grid.nodes * x.real) / math.sqrt(2.0 * math.pi)

    def feature_map(self) -> FeatureMap:
        """phi(x)(t) = exp(i t x) / sqrt(2 pi) on (-a, a), real x only."""
        return FeatureMap(
            domain_label=f"real frequencies up to {self.max_frequency:g}",
            grid=self.grid,
            evaluate=self._feature_values,
            closed_kernel=self.kernel,
        )

    def feature(self, x) -> HVector:
        return HVector(self.grid, self._feature_values(x))


def sinc_ratio(a: float, u) -> np.ndarray:
    """sin(a u) / u with the removable singularity filled by its series."""
    arr = np.asarray(u, dtype=float)
    small = np.abs(arr) < 1e-4
    safe = np.where(small, 1.0, arr)
    z = a * arr
    series = a * (1.0 - z * z / 6.0 + z ** 4 / 120.0)
    out = np.where(small, series, np.sin(a * safe) / safe)
    return out if arr.ndim else float(out)


@dataclass(frozen=True)
class SincIdentityReport:
    a: float
    x: float
    y: float
    radius: float
    lhs: float
    rhs: float
    abs_err: float


def sinc_identity_check(
    a: float, x: float, y: float, radius: float, *, nodes_per_panel: int = 8
) -> SincIdentityReport:
    """Quadrature check of the sine-product integral identity.

    Integrates sin(a(t-x)) sin(a(t-y)) / ((t-x)(t-y)) over (-radius, radius)
    and compares with pi sin(a(y-x))/(y-x).  The truncated tail is O(1/radius),
    so the discrepancy should sit below 4/radius plus quadrature noise.
    """
    window = truncate_line(radius)
    panels = panels_for_oscillation(window.length, 2.0 * a, minimum=16)
    g = build_grid(window, panels, nodes_per_panel, breakpoints=(x, y))
    vals = sinc_ratio(a, g.nodes - x) * sinc_ratio(a, g.nodes - y)
    lhs = float(integrate(g, vals).real)
    rhs = float(math.pi * sinc_ratio(a, y - x))
    return SincIdentityReport(a, x, y, radius, lhs, rhs, abs(lhs - rhs))


PRODUCT_NODE_CAP = 10 ** 6


@dataclass(frozen=True, eq=False)
class ProductGrid:
    """Cartesian product of one-dimensional grids, row-major node ordering."""

    factors: tuple
    nodes: np.ndarray
    weights: np.ndarray
    rho_at_nodes: np.ndarray

    @property
    def size(self) -> int:
        return self.weights.size

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    def compatible_with(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is ProductGrid
            and self.n_factors == other.n_factors
            and all(a.compatible_with(b) for a, b in zip(self.factors, other.factors))
        )


def product_grid(grids: Sequence[QuadGrid], cap: int = PRODUCT_NODE_CAP) -> ProductGrid:
    gs = tuple(grids)
    if not gs:
        raise ValueError("need at least one factor grid")
    total = 1
    for g in gs:
        total *= g.size
    if total > cap:
        raise ValueError(f"product grid would hold {total} nodes, above the cap {cap}")
    mesh = np.meshgrid(*[g.nodes for g in gs], indexing="ij")
    nodes = np.stack([m.ravel() for m in mesh], axis=-1)
    weights = reduce(np.kron, [g.weights for g in gs])
    rho = reduce(np.kron, [g.rho_at_nodes for g in gs])
    for arr in (nodes, weights, rho):
        arr.setflags(write=False)
    return ProductGrid(gs, nodes, weights, rho)


def tensor_feature(maps: Sequence[FeatureMap], cap: int = PRODUCT_NODE_CAP) -> FeatureMap:
    """Feature map of the product: phi(x_1..x_N) is the outer product of the
    factor features, flattened to match the product grid ordering.

    The kernel of the product map factors into the product of the factor
    kernels, so a closed kernel is attached whenever every factor has one.
    """
    ms = tuple(maps)
    if not ms:
        raise ValueError("need at least one factor map")
    pgrid = product_grid([m.grid for m in ms], cap=cap)

    def evaluate(xs):
        xs = tuple(xs)
        if len(xs) != len(ms):
            raise ValueError("arity mismatch: point length must equal factor count")
        return reduce(np.kron, [m.feature(x).values for m, x in zip(ms, xs)])

    closed = None
    if all(m.closed_kernel is not None for m in ms):
        kernels = [m.closed_kernel for m in ms]

        def closed(xs, ys):
            return tensor_kernel(kernels, xs, ys)

    label = " x ".join(m.domain_label for m in ms)
    return FeatureMap(domain_label=label, grid=pgrid, evaluate=evaluate, closed_kernel=closed)


def tensor_kernel(kernels: Sequence[Callable], xs, ys) -> complex:
    """Product kernel prod_i k_i(x_i, y_i) for tuple arguments."""
    ks = tuple(kernels)
    xs = tuple(xs)
    ys = tuple(ys)
    if not (len(ks) == len(xs) == len(ys)):
        raise ValueError("arity mismatch: kernels and points must align")
    out = complex(1.0)
    for k, x, y in zip(ks, xs, ys):
        out *= complex(k(x, y))
    return out
