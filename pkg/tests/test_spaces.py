"""Sobolev-type and bandlimited spaces, sinc identity, tensor products."""

import math

import numpy as np
import pytest

from rkhskit.numerics import (
    build_grid,
    inner_weighted,
    make_interval,
    norm_weighted,
    sample,
)
from rkhskit.spaces import (
    PaleyWienerSpace,
    SobolevSpace,
    product_grid,
    sinc_identity_check,
    sinc_ratio,
    tensor_feature,
    tensor_kernel,
)
from rkhskit.transforms import kernel_eval

LN15 = 0.4054651081081644  # log(1.5)
LN18 = 0.5877866649021191  # log(1.8)
INV_PI = 0.3183098861837907
PI_SIN1 = 2.643559064081456  # pi * sin(1)


# ---------------------------------------------------------------- sobolev


def test_const_weight_kernel_is_overlap_length():
    s = SobolevSpace(make_interval(-1.0, 1.0), 0.0)
    assert s.kernel(0.5, 0.8) == pytest.approx(0.5, abs=1e-15)
    assert s.kernel(-0.5, 0.8) == 0.0
    assert s.kernel(-0.3, -0.7) == pytest.approx(0.3, abs=1e-15)
    assert s.kernel(0.8, 0.8) == pytest.approx(0.8, abs=1e-15)


def test_affine_weight_kernel_closed_form():
    s = SobolevSpace(make_interval(-1.0, 1.0), 0.0, rho=lambda t: 1.0 + t)
    # integral of 1/(1+t) from 0 to med
    assert s.kernel(0.5, 0.9) == pytest.approx(LN15, abs=1e-14)
    assert s.kernel(0.8, 0.8) == pytest.approx(LN18, abs=1e-14)
    assert s.kernel(-0.2, 0.4) == 0.0


def test_kernel_symmetry_and_psd():
    s = SobolevSpace(make_interval(-1.0, 1.0), 0.0, rho=lambda t: 1.0 + t)
    pts = np.linspace(-0.8, 0.8, 7)
    G = np.array([[s.kernel(x, y) for y in pts] for x in pts])
    np.testing.assert_allclose(G, G.T, atol=1e-14)
    assert np.linalg.eigvalsh(G).min() > -1e-12


def test_feature_map_quadrature_matches_kernel():
    s = SobolevSpace(make_interval(-1.0, 1.0), 0.0)
    pts = [-0.7, -0.2, 0.4, 0.9]
    fm = s.feature_map(pts)
    for x in pts:
        for y in pts:
            assert abs(kernel_eval(fm, x, y) - s.kernel(x, y)) < 1e-12


def test_reproducing_property_small():
    s = SobolevSpace(make_interval(0.0, 1.0), 0.0, rho=lambda t: 1.0 + t)
    # evaluation points must sit on panel edges: the slope sections jump there
    ys = (0.2, 0.5, 0.9)
    fm = s.feature_map(ys)
    df = sample(fm.grid, np.cos)  # f = sin, f(0) = 0
    for y in ys:
        lhs = inner_weighted(df, s.kernel_section_slope(y, fm.grid))
        assert abs(lhs - math.sin(y)) < 1e-8


def test_indefinite_transform_is_isometric():
    s = SobolevSpace(make_interval(-1.0, 1.0), 0.0, panels=32, nodes_per_panel=16)
    f = sample(s.grid, lambda t: np.cos(3.0 * t) + 0.4j * t * t * np.exp(t))
    lhs = s.norm_from_samples(sample(s.grid, lambda t: np.sin(3.0 * t) / 3.0 + 0.4j * (t * t - 2 * t + 2) * np.exp(t) - 0.8j))
    # norm of the primitive in the derivative norm equals the L2 norm of f
    rhs = norm_weighted(f)
    assert abs(lhs - rhs) / rhs < 1e-8


def test_anchor_must_lie_in_interval():
    with pytest.raises(ValueError, match="anchor"):
        SobolevSpace(make_interval(0.0, 1.0), 2.0)


def test_interval_must_be_finite():
    with pytest.raises(ValueError, match="finite"):
        SobolevSpace(make_interval(0.0, math.inf), 0.0)


def test_nonintegrable_weight_grows_under_refinement():
    # integrability of 1/rho toward c is only seen at grid resolution; a
    # failing weight shows up as diagonal kernel values that keep climbing
    s = SobolevSpace(make_interval(0.0, 1.0), 0.0, rho=lambda t: t)
    ks = [s.kernel(0.5, 0.5, panels=p) for p in (8, 32, 128)]
    assert ks[0] < ks[1] < ks[2]
    assert ks[2] - ks[0] > 0.5


def test_negative_weight_rejected():
    with pytest.raises(ValueError, match="weight"):
        SobolevSpace(make_interval(0.0, 1.0), 0.0, rho=lambda t: 0.0 * t - 1.0)


def test_points_outside_interval_rejected():
    s = SobolevSpace(make_interval(0.0, 1.0), 0.0)
    with pytest.raises(ValueError, match="outside"):
        s.kernel(0.5, 1.5)


# ---------------------------------------------------------- paley-wiener


def test_pw_kernel_values():
    pw = PaleyWienerSpace(1.0)
    assert pw.kernel(0.0, 0.0).real == pytest.approx(INV_PI, abs=1e-15)
    assert abs(pw.kernel(0.0, math.pi)) < 1e-15
    assert pw.kernel(0.0, 1.0).real == pytest.approx(math.sin(1.0) / math.pi, abs=1e-15)


def test_pw_kernel_translation_invariance():
    pw = PaleyWienerSpace(2.0)
    for d in (0.3, 1.7):
        assert pw.kernel(1.1, 1.1 + d) == pytest.approx(pw.kernel(0.0, d), abs=1e-15)


def test_pw_kernel_series_branch_matches_formula():
    pw = PaleyWienerSpace(1.5)
    # just below the series cutoff the ratio formula is still well
    # conditioned, so the two branches must agree there
    d = 9.9e-5
    want = math.sin(1.5 * d) / (math.pi * d)
    assert pw.kernel(0.0, d).real == pytest.approx(want, abs=1e-15)
    assert pw.kernel(0.0, 0.0).real == pytest.approx(1.5 / math.pi, abs=1e-15)


def test_pw_feature_rejects_complex_argument():
    pw = PaleyWienerSpace(1.0)
    with pytest.raises(ValueError, match="closed form"):
        pw.feature(1.0 + 1.0j)


def test_pw_feature_rejects_unresolved_frequency():
    pw = PaleyWienerSpace(1.0, max_frequency=10.0)
    with pytest.raises(ValueError, match="resolution"):
        pw.feature(50.0)


def test_sinc_ratio_series_branch():
    a = 2.0
    # sin(a u)/u -> a as u -> 0, and the series agrees with the ratio
    # just below its cutoff
    assert sinc_ratio(a, 0.0) == pytest.approx(a, abs=1e-15)
    u = 9e-5
    assert sinc_ratio(a, u) == pytest.approx(math.sin(a * u) / u, abs=1e-12)


def test_sinc_identity_at_unit_offset():
    rep = sinc_identity_check(1.0, 0.0, 1.0, 1000.0)
    assert rep.rhs == pytest.approx(PI_SIN1, abs=1e-12)
    assert rep.abs_err <= 4.0 / 1000.0 + 1e-6


def test_sinc_identity_coincident_points_give_pi():
    rep = sinc_identity_check(1.0, 0.0, 0.0, 1000.0)
    assert rep.rhs == pytest.approx(math.pi, abs=1e-12)
    assert abs(rep.lhs - math.pi) < 3e-3


# ----------------------------------------------------------------- tensor


def test_tensor_kernel_factorizes():
    pw = PaleyWienerSpace(1.0, max_frequency=10.0)
    sob = SobolevSpace(make_interval(-1.0, 1.0), 0.0)
    fm1 = pw.feature_map()
    # sobolev coordinates must be declared so the indicators stay
    # panel-aligned in the product quadrature
    fm2 = sob.feature_map([-0.6, -0.3, 0.5])
    prod = tensor_feature([fm1, fm2])
    for xs, ys in [((0.4, 0.5), (1.2, -0.3)), ((0.0, -0.6), (2.5, -0.3))]:
        want = pw.kernel(xs[0], ys[0]) * sob.kernel(xs[1], ys[1])
        got = kernel_eval(prod, xs, ys)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))
        closed = tensor_kernel([pw.kernel, sob.kernel], xs, ys)
        assert abs(closed - want) < 1e-15


def test_tensor_kernel_annihilates_on_zero_factor():
    pw = PaleyWienerSpace(1.0, max_frequency=10.0)
    sob = SobolevSpace(make_interval(-1.0, 1.0), 0.0)
    prod = tensor_feature([pw.feature_map(), sob.feature_map([-0.5, 0.5])])
    # the sobolev factor pairs points on opposite sides of the anchor, so
    # the whole product kernel vanishes
    assert abs(kernel_eval(prod, (0.4, 0.5), (1.2, -0.5))) < 1e-12


def test_tensor_arity_mismatch():
    sob = SobolevSpace(make_interval(-1.0, 1.0), 0.0)
    fm = sob.feature_map([0.5])
    prod = tensor_feature([fm, fm])
    with pytest.raises(ValueError, match="arity"):
        prod.feature((0.5,))


def test_product_grid_cap():
    g = build_grid(make_interval(0.0, 1.0), 200, 10)
    with pytest.raises(ValueError, match="would hold"):
        product_grid([g, g])
