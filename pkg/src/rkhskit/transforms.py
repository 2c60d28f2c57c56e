"""Feature maps, the integral transforms they induce, and Gram-matrix
machinery for inner products on the transform image.

A feature map phi sends points of a parameter set E into a Hilbert space
realized as grid samples (:class:`~rkhskit.numerics.HVector`).  The induced
transform of a vector f is the function x |-> <f, phi(x)>; its image carries
the unique inner product making the transform a coisometry, and on the span
of finitely many kernel sections that inner product is computed through the
Gram matrix of the corresponding feature vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.linalg as sla

from .numerics import HVector, fsum_complex, inner_weighted

__all__ = [
    "FeatureMap",
    "SpanBasis",
    "TransformImage",
    "transform",
    "kernel_eval",
    "build_span_basis",
    "project_span",
    "span_combination",
    "span_image",
    "projection_residual",
    "opr_inner",
    "ContractionReport",
    "contraction_check",
]

RIDGE_SCALE = 1e-10


@dataclass(frozen=True, eq=False)
class FeatureMap:
    """Map from a parameter set into grid-sampled Hilbert-space vectors.

    ``evaluate`` returns node values for a parameter point; every feature
    lives on the one ``grid`` fixed here.  ``closed_kernel``, when present,
    evaluates <phi(y), phi(x)> without quadrature and is the only route
    that accepts parameters off the real domain (e.g. complex points).
    """

    domain_label: str
    grid: object
    evaluate: Callable[[object], np.ndarray]
    closed_kernel: Callable[[object, object], complex] | None = None

    def feature(self, x) -> HVector:
        return HVector(self.grid, np.asarray(self.evaluate(x), dtype=complex))


def kernel_eval(phi: FeatureMap, x, y) -> complex:
    """Kernel of the transform image by quadrature: k(x, y) = <phi(y), phi(x)>."""
    return inner_weighted(phi.feature(y), phi.feature(x))


@dataclass(frozen=True, eq=False)
class SpanBasis:
    """Feature vectors at finitely many points, their Gram matrix, and a solver.

    The ridge is relative, ``RIDGE_SCALE * trace(G) / m``; it absorbs
    numerically dependent sections (e.g. nearly coincident points) that an
    exact-arithmetic treatment never sees.
    """

    phi: FeatureMap
    points: tuple
    gram: np.ndarray
    ridge: float
    factor: object = field(repr=False)
    features: tuple = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def solve(self, b) -> np.ndarray:
        return sla.cho_solve(self.factor, np.asarray(b, dtype=complex))


def build_span_basis(phi: FeatureMap, points: Sequence) -> SpanBasis:
    """Assemble the Gram matrix G_ij = <phi(x_j), phi(x_i)> and factor it."""
    pts = tuple(points)
    if not pts:
        raise ValueError("a span basis needs at least one point")
    feats = tuple(phi.feature(x) for x in pts)
    m = len(pts)
    G = np.empty((m, m), dtype=complex)
    for i in range(m):
        for j in range(i + 1):
            val = inner_weighted(feats[j], feats[i])
            if i == j:
                G[i, i] = complex(val.real, 0.0)
            else:
                G[i, j] = val
                G[j, i] = np.conj(val)
    ridge = RIDGE_SCALE * float(np.trace(G).real) / m
    if ridge <= 0.0:
        raise ValueError("degenerate basis: all features vanish")
    factor = sla.cho_factor(G + ridge * np.eye(m))
    return SpanBasis(phi, pts, G, ridge, factor, feats)


@dataclass(frozen=True, eq=False)
class TransformImage:
    """Element of the transform image, evaluable on the parameter set.

    Backed either by the raw Hilbert-space vector (evaluation by quadrature
    against features) or by coefficients over a :class:`SpanBasis`
    (evaluation through kernel sections, which also works wherever the
    closed-form kernel does).
    """

    phi: FeatureMap
    raw: HVector | None = None
    basis: SpanBasis | None = None
    coeffs: np.ndarray | None = None

    def at(self, x) -> complex:
        if self.raw is not None:
            return inner_weighted(self.raw, self.phi.feature(x))
        k = self.phi.closed_kernel
        if k is not None:
            vals = np.array([k(x, p) for p in self.basis.points])
        else:
            vals = np.array([kernel_eval(self.phi, x, p) for p in self.basis.points])
        return fsum_complex(vals * self.coeffs)


def transform(f: HVector, phi: FeatureMap) -> TransformImage:
    """The integral transform of f: the function x |-> <f, phi(x)>."""
    if not f.grid.compatible_with(phi.grid):
        raise ValueError("vector and feature map live on different grids")
    return TransformImage(phi, raw=f)


def span_image(basis: SpanBasis, coeffs) -> TransformImage:
    """Image element sum_i c_i k(., x_i) given by span coefficients."""
    c = np.asarray(coeffs, dtype=complex)
    if c.shape != (basis.size,):
        raise ValueError("coefficient length must match basis size")
    return TransformImage(basis.phi, basis=basis, coeffs=c)


def span_combination(basis: SpanBasis, coeffs) -> HVector:
    """The Hilbert-space vector sum_i c_i phi(x_i)."""
    c = np.asarray(coeffs, dtype=complex)
    if c.shape != (basis.size,):
        raise ValueError("coefficient length must match basis size")
    acc = np.zeros(basis.phi.grid.size, dtype=complex)
    for ci, ft in zip(c, basis.features):
        acc = acc + ci * ft.values
    return HVector(basis.phi.grid, acc)


def project_span(f: HVector, basis: SpanBasis) -> np.ndarray:
    """Ridge-regularized coefficients of the projection of f onto the span."""
    b = np.array([inner_weighted(f, ft) for ft in basis.features])
    return basis.solve(b)


def projection_residual(f: HVector, basis: SpanBasis, coeffs=None) -> float:
    """Norm of f minus its span projection, recomputed explicitly."""
    c = project_span(f, basis) if coeffs is None else np.asarray(coeffs, dtype=complex)
    p = span_combination(basis, c)
    diff = HVector(f.grid, f.values - p.values)
    return math.sqrt(max(inner_weighted(diff, diff).real, 0.0))


def opr_inner(u: TransformImage, v: TransformImage) -> complex:
    """Operator-range inner product of two span-backed images.

    For u = sum_i c_i k(., x_i) and v = sum_j d_j k(., x_j) over one shared
    basis this is sum_ij conj(d_j) G_ji c_i, the inner product pulled back
    from the source space through the coisometry.
    """
    if u.basis is None or v.basis is None or u.basis is not v.basis:
        raise ValueError("operator-range inner product needs one shared span basis")
    T = np.conj(v.coeffs)[:, None] * u.basis.gram * u.coeffs[None, :]
    return fsum_complex(T)


@dataclass(frozen=True)
class ContractionReport:
    norm_source: float
    norm_image: float
    slack: float


def contraction_check(f: HVector, phi: FeatureMap, basis: SpanBasis) -> ContractionReport:
    """Compare the source norm of f against the image norm of its projection.

    slack = norm_source - norm_image is nonnegative up to ridge and
    rounding, and vanishes exactly when f lies in the span of the features.
    """
    c = project_span(f, basis)
    img = span_image(basis, c)
    norm_source = math.sqrt(max(inner_weighted(f, f).real, 0.0))
    norm_image = math.sqrt(max(opr_inner(img, img).real, 0.0))
    return ContractionReport(norm_source, norm_image, norm_source - norm_image)
