"""Truncated Fourier transform pairs on boxes.

Everything here is direct quadrature: the forward transform integrates
f(t) exp(-i t.x) over a finite box, the conjugate transform integrates
against exp(+i t.x) over a finite frequency box, and the checks measure how
close the pair comes to a unitary on the window (norm preservation, mutual
inversion, and the indefinite-integral identity on N-dimensional boxes).
Multi-axis sums are evaluated by per-axis kernel contractions, which is
algebraically the same sum as over the full product grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .numerics import (
    QuadGrid,
    build_grid,
    fsum_complex,
    make_interval,
    panels_for_oscillation,
)

__all__ = [
    "BoxDomain",
    "FreqLattice",
    "box_domain",
    "freq_lattice",
    "sample_on_box",
    "fourier_on_lattice",
    "transform_at",
    "indicator_hat",
    "PlancherelNormReport",
    "plancherel_norm_check",
    "MutualInverseReport",
    "mutual_inverse_check",
    "BoxInversionReport",
    "box_inversion_check",
    "BOX_NODE_CAP",
]

BOX_NODE_CAP = 10 ** 7
_TWO_PI = 2.0 * math.pi
# kernel blocks are materialized at most this many complex entries at a time
_CHUNK_ELEMS = 1 << 22


def _chunk_rows(ncols: int) -> int:
    return max(1, _CHUNK_ELEMS // max(ncols, 1))


def _check_axes(axes: Sequence[QuadGrid], max_ndim: int) -> tuple:
    axes = tuple(axes)
    if not 1 <= len(axes) <= max_ndim:
        raise ValueError(f"dimension must be between 1 and {max_ndim}")
    total = 1
    for g in axes:
        total *= g.size
    if total > BOX_NODE_CAP:
        raise ValueError(f"grid would hold {total} nodes, above the cap {BOX_NODE_CAP}")
    return axes


@dataclass(frozen=True, eq=False)
class BoxDomain:
    """Product of symmetric windows (-a_j, a_j) with per-axis grids.

    ``max_frequency`` records the resolution the grids were built for; None
    for hand-assembled boxes, which then skip the radius validation.
    """

    axes: tuple
    max_frequency: float | None = None

    @property
    def ndim(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> tuple:
        return tuple(g.size for g in self.axes)

    @property
    def half_widths(self) -> tuple:
        return tuple(g.interval.hi for g in self.axes)


@dataclass(frozen=True, eq=False)
class FreqLattice:
    """Per-axis frequency grids on (-radius, radius)."""

    axes: tuple

    @property
    def ndim(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> tuple:
        return tuple(g.size for g in self.axes)


def box_domain(
    half_widths: Sequence[float],
    *,
    max_frequency: float,
    nodes_per_panel: int = 8,
    min_panels: int = 8,
) -> BoxDomain:
    """Box with per-axis grids fine enough for exp(-i t x) factors up to
    |x| = max_frequency; pick max_frequency at least the frequency radius
    the transform will be evaluated on."""
    axes = []
    for a in half_widths:
        if not (math.isfinite(a) and a > 0):
            raise ValueError("half-widths must be positive and finite")
        panels = panels_for_oscillation(2.0 * a, max_frequency, minimum=min_panels)
        axes.append(build_grid(make_interval(-a, a), panels, nodes_per_panel))
    return BoxDomain(_check_axes(axes, 3), max_frequency=float(max_frequency))


def freq_lattice(
    radius: float,
    ndim: int,
    *,
    rate: float,
    nodes_per_panel: int = 8,
    min_panels: int = 8,
) -> FreqLattice:
    """Frequency box (-radius, radius)^ndim resolving exp(i t x) factors with
    |t| up to ``rate`` (normally the largest time half-width involved)."""
    if not (math.isfinite(radius) and radius > 0):
        raise ValueError("radius must be positive and finite")
    panels = panels_for_oscillation(2.0 * radius, rate, minimum=min_panels)
    axis = build_grid(make_interval(-radius, radius), panels, nodes_per_panel)
    return FreqLattice(_check_axes([axis] * ndim, 3))


def _require_resolution(box: BoxDomain, radius: float) -> None:
    if box.max_frequency is not None and radius > box.max_frequency * (1.0 + 1e-12):
        raise ValueError(
            f"box resolves frequencies up to {box.max_frequency:g}, "
            f"below the requested radius {radius:g}"
        )


def sample_on_box(box: BoxDomain, fn: Callable) -> np.ndarray:
    """Sample a vectorized callable of ndim arguments on the box grid."""
    mesh = np.meshgrid(*[g.nodes for g in box.axes], indexing="ij")
    return np.asarray(fn(*mesh), dtype=complex)


def _axis_apply(arr: np.ndarray, axis: int, dst_nodes: np.ndarray, src: QuadGrid, sign: float) -> np.ndarray:
    """Contract exp(sign i x t) w(t) against one axis, chunked over x rows."""
    moved = np.moveaxis(arr, axis, 0)
    flat = moved.reshape(src.size, -1)
    out = np.empty((dst_nodes.size, flat.shape[1]), dtype=complex)
    wsrc = src.weights
    step = _chunk_rows(src.size)
    for i in range(0, dst_nodes.size, step):
        block = dst_nodes[i : i + step]
        K = np.exp(sign * 1j * np.outer(block, src.nodes)) * wsrc
        out[i : i + block.size] = K @ flat
    out = out.reshape((dst_nodes.size,) + moved.shape[1:])
    return np.moveaxis(out, 0, axis)


def fourier_on_lattice(values: np.ndarray, box: BoxDomain, lattice: FreqLattice) -> np.ndarray:
    """Truncated Fourier transform of box samples, tabulated on the lattice.

    (2 pi)^(-N/2) * integral over the box of f(t) exp(-i t.x) dt, one kernel
    contraction per axis.
    """
    if lattice.ndim != box.ndim:
        raise ValueError("lattice and box dimensions differ")
    arr = np.asarray(values, dtype=complex).reshape(box.shape)
    for j, (dst, src) in enumerate(zip(lattice.axes, box.axes)):
        arr = _axis_apply(arr, j, dst.nodes, src, sign=-1.0)
    return arr * _TWO_PI ** (-box.ndim / 2.0)


def transform_at(values: np.ndarray, src_axes: Sequence[QuadGrid], points, sign: float) -> np.ndarray:
    """The same truncated transform evaluated at arbitrary points.

    ``sign=-1`` is the forward kernel exp(-i t.x) integrated over time
    samples; ``sign=+1`` is the conjugate kernel integrated over frequency
    samples.  Points are an (M, N) array (or scalars for N = 1).
    """
    axes = tuple(src_axes)
    n = len(axes)
    pts = np.asarray(points, dtype=float)
    scalar = pts.ndim == 0
    if pts.ndim <= 1 and n == 1:
        pts = np.atleast_1d(pts)[:, None]
    pts = np.atleast_2d(pts)
    if pts.shape[1] != n:
        raise ValueError("point arity must match the grid dimension")
    mesh = np.meshgrid(*[g.nodes for g in axes], indexing="ij")
    nodes = np.stack([m.ravel() for m in mesh], axis=0)
    wfull = reduce(np.kron, [g.weights for g in axes])
    weighted = np.asarray(values, dtype=complex).ravel() * wfull
    out = np.empty(pts.shape[0], dtype=complex)
    step = _chunk_rows(weighted.size)
    for i in range(0, pts.shape[0], step):
        block = pts[i : i + step]
        E = np.exp(sign * 1j * (block @ nodes))
        out[i : i + block.shape[0]] = E @ weighted
    out = out * _TWO_PI ** (-n / 2.0)
    return complex(out[0]) if scalar else out


def indicator_hat(t: float, x) -> np.ndarray:
    """(exp(i t x) - 1) / (i x), the oriented transform of the indicator of
    (0, t), with the removable singularity filled by its series."""
    xs = np.asarray(x, dtype=float)
    small = np.abs(xs) < 1e-4
    safe = np.where(small, 1.0, xs)
    z = t * xs
    series = t * (1.0 + 1j * z / 2.0 - z ** 2 / 6.0 - 1j * z ** 3 / 24.0)
    out = np.where(small, series, (np.exp(1j * t * safe) - 1.0) / (1j * safe))
    return out if xs.ndim else complex(out)


def _lattice_norm(values: np.ndarray, axes: Sequence[QuadGrid]) -> float:
    # lattices run to millions of nodes; pairwise summation is plenty here
    wfull = reduce(np.kron, [g.weights for g in axes])
    sq = float(np.sum(np.abs(np.asarray(values).ravel()) ** 2 * wfull))
    return math.sqrt(max(sq, 0.0))


@dataclass(frozen=True)
class PlancherelNormReport:
    radius: float
    norm_time: float
    norm_freq: float

    @property
    def rel_err(self) -> float:
        return abs(self.norm_freq - self.norm_time) / self.norm_time


def plancherel_norm_check(
    fn: Callable,
    box: BoxDomain,
    radius: float,
    *,
    freq_rate: float | None = None,
    nodes_per_panel: int = 8,
) -> PlancherelNormReport:
    """Window L2 norm of f against the L2 norm of its truncated transform
    over the frequency box; rel_err carries truncation tails plus quadrature.

    The box must have been built with max_frequency >= radius.
    """
    _require_resolution(box, radius)
    vals = sample_on_box(box, fn)
    rate = freq_rate if freq_rate is not None else max(box.half_widths)
    lattice = freq_lattice(radius, box.ndim, rate=rate, nodes_per_panel=nodes_per_panel)
    F = fourier_on_lattice(vals, box, lattice)
    return PlancherelNormReport(
        radius=radius,
        norm_time=_lattice_norm(vals, box.axes),
        norm_freq=_lattice_norm(F, lattice.axes),
    )


@dataclass(frozen=True)
class MutualInverseReport:
    radius: float
    n_probes: int
    max_abs_err: float


def default_probes(box: BoxDomain, n_probes: int = 50, margin: float = 0.1) -> np.ndarray:
    """Probe lattice strictly inside the box, margin*a_j away from the edges."""
    per_axis = max(2, int(round(n_probes ** (1.0 / box.ndim))))
    if box.ndim == 1:
        per_axis = n_probes
    axes = [
        np.linspace(-(1.0 - margin) * a, (1.0 - margin) * a, per_axis)
        for a in box.half_widths
    ]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


def mutual_inverse_check(
    fn: Callable,
    box: BoxDomain,
    radius: float,
    probes: np.ndarray | None = None,
    *,
    freq_rate: float | None = None,
    nodes_per_panel: int = 8,
    n_probes: int = 50,
) -> MutualInverseReport:
    """Forward then conjugate transform, compared with f at interior probes.

    The conjugate transform runs over the truncated frequency box, so the
    discrepancy carries the inversion tail (roughly 1/radius scaled by the
    smoothness of f) on top of quadrature error.
    """
    _require_resolution(box, radius)
    vals = sample_on_box(box, fn)
    rate = freq_rate if freq_rate is not None else max(box.half_widths)
    lattice = freq_lattice(radius, box.ndim, rate=rate, nodes_per_panel=nodes_per_panel)
    F = fourier_on_lattice(vals, box, lattice)
    if probes is None:
        probes = default_probes(box, n_probes=n_probes)
    back = transform_at(F, lattice.axes, probes, sign=+1.0)
    ref = np.asarray(fn(*[probes[:, j] for j in range(box.ndim)]), dtype=complex)
    err = float(np.max(np.abs(back - ref)))
    return MutualInverseReport(radius=radius, n_probes=probes.shape[0], max_abs_err=err)


@dataclass(frozen=True)
class BoxInversionReport:
    radius: float
    t: tuple
    lhs: complex
    rhs: complex

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)


def box_inversion_check(
    fn: Callable,
    box: BoxDomain,
    radius: float,
    t: Sequence[float],
    *,
    freq_rate: float | None = None,
    nodes_per_panel: int = 8,
    lhs_panels: int = 16,
) -> BoxInversionReport:
    """Indefinite-integral inversion identity on a box.

    lhs integrates f over (0, t_1) x ... x (0, t_N) by fresh quadrature;
    rhs pushes the box-truncated transform of f back through the product of
    indicator transforms:

        (2 pi)^(-N/2) * integral of F(x) prod_j (exp(i t_j x_j) - 1)/(i x_j) dx

    over the frequency box.  Their gap carries the O(1/radius) tail.
    """
    _require_resolution(box, radius)
    ts = tuple(float(v) for v in t)
    if len(ts) != box.ndim:
        raise ValueError("t arity must match the box dimension")
    for tj, a in zip(ts, box.half_widths):
        if not 0.0 < tj < a:
            raise ValueError("t must lie strictly inside the positive box")

    lhs_axes = [build_grid(make_interval(0.0, tj), lhs_panels, 16) for tj in ts]
    mesh = np.meshgrid(*[g.nodes for g in lhs_axes], indexing="ij")
    lhs_vals = np.asarray(fn(*mesh), dtype=complex).ravel()
    lhs_w = reduce(np.kron, [g.weights for g in lhs_axes])
    lhs = fsum_complex(lhs_vals * lhs_w)

    vals = sample_on_box(box, fn)
    rate = freq_rate if freq_rate is not None else 2.0 * max(box.half_widths)
    lattice = freq_lattice(radius, box.ndim, rate=rate, nodes_per_panel=nodes_per_panel)
    F = fourier_on_lattice(vals, box, lattice)
    arr = F
    for j, (tj, g) in enumerate(zip(ts, lattice.axes)):
        hat = indicator_hat(tj, g.nodes) * g.weights
        arr = np.tensordot(arr, hat, axes=([0], [0]))
        # contracting axis 0 each round walks through the original axes in order
    rhs = complex(arr) * _TWO_PI ** (-box.ndim / 2.0)
    return BoxInversionReport(radius=radius, t=ts, lhs=lhs, rhs=rhs)
