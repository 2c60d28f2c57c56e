"""Inverse-transform formulas.

When the span of the features is itself a reproducing kernel Hilbert space,
a transformed vector can be evaluated back on the source domain by pairing
its image with the transformed kernel sections.  The same recipe survives
composition with any isometry S into another evaluable RKHS W: the value
(S f)(t) is the image-space inner product of f-hat with the conjugate of
the S-composed features at t.  Orthonormal-coefficient recovery is the
special case W = little-l2 over an index set.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .numerics import (
    HVector,
    QuadGrid,
    build_grid,
    cumulative_integral,
    fsum_complex,
    inner_weighted,
    integrate,
    make_interval,
    med3,
    panels_for_oscillation,
    sample,
    truncate_line,
)
from .spaces import PaleyWienerSpace, sinc_ratio
from .transforms import (
    FeatureMap,
    SpanBasis,
    TransformImage,
    opr_inner,
    project_span,
    span_image,
)

__all__ = [
    "EvaluableRKHS",
    "TransformationSequence",
    "OrthonormalSystem",
    "invert_at",
    "generalized_invert_at",
    "identity_sequence",
    "indefinite_integral_sequence",
    "exponential_system",
    "cons_sequence",
    "fourier_coeff_invert",
    "RestrictionIsometryReport",
    "restriction_isometry_check",
]


@dataclass(frozen=True)
class EvaluableRKHS:
    """An RKHS seen operationally: a kernel, plus (optionally) grid-vector
    representatives of its kernel sections in the source Hilbert space.

    ``section(t)`` must satisfy <section(t), phi(x)> = k(x, t); for the
    canonical map that is the feature vector at t itself, not a derivative
    or other surrogate.  Pointwise evaluation of arbitrary grid vectors
    (identity sequences) goes through ``section``; span inversion needs
    only ``kernel``.
    """

    domain_label: str
    kernel: Callable[[object, object], complex]
    section: Callable[[object], HVector] | None = None


@dataclass(frozen=True)
class TransformationSequence:
    """A feature map phi into H followed by an isometry S from H into an
    evaluable RKHS W; ``s_apply`` sends grid vectors to functions on W's
    domain."""

    phi: FeatureMap
    s_apply: Callable[[HVector], Callable]
    w_space: EvaluableRKHS
    label: str = ""


def _as_span_coeffs(image: TransformImage, basis: SpanBasis) -> np.ndarray:
    if image.basis is basis and image.coeffs is not None:
        return image.coeffs
    if image.raw is not None:
        return project_span(image.raw, basis)
    raise ValueError("image was built over a different span basis")


def invert_at(
    image: TransformImage,
    t,
    h_space: EvaluableRKHS,
    basis: SpanBasis,
    *,
    coarse_warn: float | None = 1e-3,
) -> complex:
    """Evaluate the source of a transformed vector at t.

    Pairs the image with the transform of the kernel section at t, both
    projected onto the span basis.  The section's projection coefficients
    come from kernel evaluations at the basis points, so no quadrature
    against a possibly discontinuous feature enters here.  Exact up to
    ridge when the source lies in the span; for anything else this
    evaluates the span projection of the source, and the kernel-section
    projection residual (relative, against ||k_t||) is worth watching,
    hence the warning.
    """
    b = np.array([complex(h_space.kernel(x, t)) for x in basis.points])
    d = basis.solve(b)
    if coarse_warn is not None:
        ktt = complex(h_space.kernel(t, t)).real
        if ktt > 0.0:
            proj_sq = fsum_complex(np.conj(d)[:, None] * basis.gram * d[None, :]).real
            resid = math.sqrt(max(ktt - proj_sq, 0.0))
            if resid > coarse_warn * math.sqrt(ktt):
                warnings.warn(f"basis too coarse for t={t!r}", RuntimeWarning, stacklevel=2)
    c = _as_span_coeffs(image, basis)
    return opr_inner(span_image(basis, c), span_image(basis, d))


def generalized_invert_at(
    seq: TransformationSequence, image: TransformImage, t, basis: SpanBasis
) -> complex:
    """Recover (S f)(t) from the transform of f through the sequence's
    isometry: the image-space inner product with the span projection of the
    pulled-back kernel section, assembled from conj((S phi(x_i))(t))."""
    b = np.array([complex(seq.s_apply(ft)(t)).conjugate() for ft in basis.features])
    d = basis.solve(b)
    c = _as_span_coeffs(image, basis)
    return opr_inner(span_image(basis, c), span_image(basis, d))


def identity_sequence(phi: FeatureMap, h_space: EvaluableRKHS) -> TransformationSequence:
    """S = identity; evaluation goes through h_space's kernel sections."""
    if h_space.section is None:
        raise ValueError("h_space must provide kernel sections")

    def s_apply(h: HVector) -> Callable:
        return lambda t: inner_weighted(h, h_space.section(t))

    return TransformationSequence(phi, s_apply, h_space, label="identity")


def indefinite_integral_sequence(phi: FeatureMap, anchor: float = 0.0) -> TransformationSequence:
    """S maps a grid vector to its primitive from ``anchor``; an isometry
    into the unit-weight Sobolev-type space anchored there, whose kernel is
    the overlap length |(anchor, med{t, u, anchor})|."""

    def s_apply(h: HVector) -> Callable:
        F = cumulative_integral(h.grid, h.values)
        Fa = F(anchor)
        return lambda t: F(t) - Fa

    def w_kernel(t, u) -> complex:
        return complex(make_interval(anchor, med3(float(t), float(u), anchor)).length)

    w = EvaluableRKHS("primitives anchored at %g" % anchor, w_kernel)
    return TransformationSequence(phi, s_apply, w, label="indefinite integral")


@dataclass(frozen=True, eq=False)
class OrthonormalSystem:
    """Finitely many orthonormal grid vectors used as a coefficient basis."""

    grid: QuadGrid
    members: tuple

    @property
    def count(self) -> int:
        return len(self.members)

    def coefficient(self, f: HVector, n: int) -> complex:
        return inner_weighted(f, self.members[n])

    def orthonormality_defect(self) -> float:
        """Largest deviation of the pairwise inner products from identity."""
        worst = 0.0
        for i, gi in enumerate(self.members):
            for j in range(i + 1):
                val = inner_weighted(self.members[j], gi)
                target = 1.0 if i == j else 0.0
                worst = max(worst, abs(val - target))
        return worst

    def reconstruct(self, coeffs: Sequence[complex], upto: int | None = None) -> HVector:
        n = self.count if upto is None else int(upto)
        acc = np.zeros(self.grid.size, dtype=complex)
        for k in range(n):
            acc = acc + complex(coeffs[k]) * self.members[k].values
        return HVector(self.grid, acc)


def exponential_system(grid: QuadGrid, count: int, half_width: float) -> OrthonormalSystem:
    """Orthonormal complex exponentials exp(i pi m t / a) / sqrt(2 a) on
    (-a, a), with frequencies enumerated m = 0, 1, -1, 2, -2, ...

    Indexing is 0-based: member n carries frequency m_n in that enumeration.
    """
    if count < 1:
        raise ValueError("count must be positive")
    a = float(half_width)
    members = []
    for n in range(count):
        m = (n + 1) // 2 if n % 2 else -(n // 2)
        # n: 0 -> 0, 1 -> 1, 2 -> -1, 3 -> 2, 4 -> -2, ...
        omega = math.pi * m / a
        members.append(sample(grid, lambda t, w=omega: np.exp(1j * w * t) / math.sqrt(2.0 * a)))
    return OrthonormalSystem(grid, tuple(members))


def cons_sequence(cons: OrthonormalSystem, phi: FeatureMap) -> TransformationSequence:
    """S maps h to its orthonormal coefficient sequence; W is little-l2 over
    the index set with the Kronecker-delta kernel."""

    def s_apply(h: HVector) -> Callable:
        return lambda n: cons.coefficient(h, int(n))

    def w_kernel(m, n) -> complex:
        return complex(1.0 if int(m) == int(n) else 0.0)

    w = EvaluableRKHS("coefficient indices", w_kernel)
    return TransformationSequence(phi, s_apply, w, label="orthonormal coefficients")


def fourier_coeff_invert(
    cons: OrthonormalSystem, phi: FeatureMap, image: TransformImage, n: int, basis: SpanBasis
) -> complex:
    """n-th orthonormal coefficient of the source, recovered through the
    transform side rather than a direct inner product (0-based index)."""
    if not 0 <= n < cons.count:
        raise IndexError("coefficient index out of range")
    return generalized_invert_at(cons_sequence(cons, phi), image, n, basis)


@dataclass(frozen=True)
class RestrictionIsometryReport:
    radius: float
    max_kernel_err: float
    span_norm_gram: float
    span_norm_window: float
    span_err: float

    @property
    def max_abs_err(self) -> float:
        return max(self.max_kernel_err, self.span_err)


def restriction_isometry_check(
    pw: PaleyWienerSpace,
    probes: Sequence[float],
    radius: float,
    coeffs: Sequence[complex] | None = None,
    *,
    nodes_per_panel: int = 8,
) -> RestrictionIsometryReport:
    """Check that restricting bandlimited functions to a window preserves the
    inner product: window L2 pairings of kernel sections reproduce kernel
    values, and the Gram norm of a span combination matches its window L2
    norm.  Discrepancies carry the O(1/radius) truncation tail.
    """
    pts = [float(p) for p in probes]
    if not pts:
        raise ValueError("need at least one probe point")
    window = truncate_line(radius)
    max_kernel_err = 0.0
    for i, xi in enumerate(pts):
        for j in range(i + 1):
            yj = pts[j]
            panels = panels_for_oscillation(window.length, 2.0 * pw.a, minimum=16)
            g = build_grid(window, panels, nodes_per_panel, breakpoints=(xi, yj))
            vals = sinc_ratio(pw.a, g.nodes - xi) * sinc_ratio(pw.a, g.nodes - yj)
            pairing = float(integrate(g, vals).real) / math.pi ** 2
            max_kernel_err = max(max_kernel_err, abs(pairing - pw.kernel(xi, yj).real))

    cs = np.ones(len(pts), dtype=complex) if coeffs is None else np.asarray(coeffs, dtype=complex)
    if cs.shape != (len(pts),):
        raise ValueError("coefficient length must match probes")
    gram_sq = fsum_complex(
        np.array(
            [
                cs[i] * np.conj(cs[j]) * pw.kernel(pts[j], pts[i])
                for i in range(len(pts))
                for j in range(len(pts))
            ]
        )
    ).real
    panels = panels_for_oscillation(window.length, 2.0 * pw.a, minimum=16)
    g = build_grid(window, panels, nodes_per_panel, breakpoints=tuple(pts))
    fvals = np.zeros(g.size, dtype=complex)
    for ci, xi in zip(cs, pts):
        fvals = fvals + ci * sinc_ratio(pw.a, g.nodes - xi) / math.pi
    window_sq = float(integrate(g, np.abs(fvals) ** 2).real)
    span_norm_gram = math.sqrt(max(gram_sq, 0.0))
    span_norm_window = math.sqrt(max(window_sq, 0.0))
    return RestrictionIsometryReport(
        radius=radius,
        max_kernel_err=max_kernel_err,
        span_norm_gram=span_norm_gram,
        span_norm_window=span_norm_window,
        span_err=abs(span_norm_gram - span_norm_window),
    )
