import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcbounds.errors import DomainError, UnsupportedOperationError
from qcbounds.metrics import (
    BoundedDiameter,
    ConvexPolytope,
    HalfSpace,
    MobiusBallMap,
    PuncturedSpace,
    UnitBall,
    dist_boundary,
    j_metric,
    k_ball_radial,
    k_exact,
    k_numeric,
    mobius_to_zero,
    polyline_length,
    rho_ball,
)

coord = st.floats(-0.7, 0.7)
ball_pt = st.tuples(coord, coord).filter(lambda p: p[0] ** 2 + p[1] ** 2 < 0.95)
upper_pt = st.tuples(st.floats(-5, 5), st.floats(0.05, 5))
nonzero_pt = st.tuples(st.floats(-5, 5), st.floats(-5, 5)).filter(lambda p: math.hypot(*p) > 0.05)


def rho_oracle(x, y):
    x, y = np.asarray(x, float), np.asarray(y, float)
    c = 1 + 2 * np.sum((x - y) ** 2) / ((1 - x @ x) * (1 - y @ y))
    return math.acosh(c)


def test_rho_ball_from_origin():
    # rho(0, r e1) = log((1+r)/(1-r))
    assert rho_ball([0, 0], [0.5, 0]) == pytest.approx(math.log(3.0), rel=1e-15)


@given(ball_pt, ball_pt)
def test_rho_matches_cosh_formula(x, y):
    assert rho_ball(x, y) == pytest.approx(rho_oracle(x, y), rel=1e-9, abs=1e-7)


@given(ball_pt, ball_pt)
def test_rho_between_j_and_2j(x, y):
    j = j_metric(UnitBall(), x, y)
    rho = rho_ball(x, y)
    assert j <= rho + 1e-12
    assert rho <= 2 * j + 1e-12


@given(ball_pt, ball_pt, ball_pt)
def test_mobius_isometry(a, x, y):
    T = MobiusBallMap(np.array(a))
    assert rho_ball(T(x), T(y)) == pytest.approx(rho_ball(x, y), rel=1e-8, abs=1e-9)


@given(ball_pt, ball_pt)
def test_mobius_inverse_and_base(a, x):
    T = mobius_to_zero(np.array(a))
    assert np.allclose(T(a), 0.0, atol=1e-14)
    assert np.allclose(T.inverse(T(x)), x, atol=1e-12)


def test_mobius_rejects_outside():
    with pytest.raises(DomainError):
        MobiusBallMap(np.array([1.0, 0.0]))


def test_dist_boundary_domains():
    assert dist_boundary(UnitBall(), [0.3, 0.4]) == pytest.approx(0.5)
    assert dist_boundary(HalfSpace(), [7.0, 0.25]) == 0.25
    assert dist_boundary(PuncturedSpace(), [3.0, 4.0]) == 5.0
    box = ConvexPolytope.box([0, 0], [4, 2])
    assert dist_boundary(box, [1.0, 1.5]) == pytest.approx(0.5)
    with pytest.raises(UnsupportedOperationError):
        dist_boundary(BoundedDiameter(2.0), [0.0, 0.0])


def test_polytope_validation():
    with pytest.raises(DomainError):
        ConvexPolytope(np.array([[2.0, 0.0]]), np.array([1.0]))
    with pytest.raises(DomainError):
        ConvexPolytope.box([0, 0], [0, 1])


def test_j_metric_value():
    # |x - y| = 0.5, min distance 0.5
    assert j_metric(UnitBall(), [0, 0], [0.5, 0]) == pytest.approx(math.log(2.0))


@given(upper_pt, upper_pt)
def test_half_space_k_is_hyperbolic(x, y):
    expected = math.acosh(1 + ((x[0] - y[0]) ** 2 + (x[1] - y[1]) ** 2) / (2 * x[1] * y[1]))
    assert k_exact(HalfSpace(), x, y) == pytest.approx(expected, rel=1e-9, abs=1e-9)


@given(nonzero_pt, nonzero_pt)
def test_punctured_k_formula(x, y):
    theta = abs(math.atan2(x[0] * y[1] - x[1] * y[0], x[0] * y[0] + x[1] * y[1]))
    expected = math.hypot(theta, math.log(math.hypot(*x) / math.hypot(*y)))
    assert k_exact(PuncturedSpace(), x, y) == pytest.approx(expected, rel=1e-9, abs=1e-12)


@given(upper_pt, upper_pt)
def test_j_le_k_half_space(x, y):
    assert j_metric(HalfSpace(), x, y) <= k_exact(HalfSpace(), x, y) + 1e-12


@given(nonzero_pt, nonzero_pt)
def test_j_le_k_punctured(x, y):
    assert j_metric(PuncturedSpace(), x, y) <= k_exact(PuncturedSpace(), x, y) + 1e-12


def test_k_exact_unsupported():
    with pytest.raises(UnsupportedOperationError):
        k_exact(UnitBall(), [0, 0], [0.1, 0])


def test_k_ball_radial():
    assert k_ball_radial([0.0, 0.0], [0.5, 0.0]) == pytest.approx(math.log(2.0))


def test_polyline_length_straight_segment():
    # density 1/x_2 on the vertical segment from (0,1) to (0,2): trapezoid of 1/t
    t = np.linspace(1.0, 2.0, 1001)
    P = np.column_stack([np.zeros_like(t), t])
    box = ConvexPolytope.box([-50, 0], [50, 100])
    assert polyline_length(box, P) == pytest.approx(math.log(2.0), abs=1e-6)


def test_k_numeric_box_matches_half_plane():
    # the box lies in the half-plane and the straight segment realizes its value
    box = ConvexPolytope.box([-50, 0], [50, 100])
    assert k_numeric(box, [0.0, 1.0], [0.0, 2.0]) == pytest.approx(math.log(2.0), abs=1e-3)


def test_k_numeric_ball_radial():
    assert k_numeric(UnitBall(), [0.0, 0.0], [0.5, 0.0]) == pytest.approx(math.log(2.0), abs=1e-3)


def test_k_numeric_ball_dominates_j_and_rho_half():
    x, y = np.array([0.6, 0.1]), np.array([-0.3, 0.7])
    k = k_numeric(UnitBall(), x, y)
    assert j_metric(UnitBall(), x, y) <= k <= 2 * j_metric(UnitBall(), x, y) + 1e-3
    # rho_B <= 2 k_B, since 2/(1-|z|^2) <= 2/(1-|z|)
    assert rho_ball(x, y) <= 2 * k + 1e-9


def test_k_numeric_refinement_is_monotone():
    x, y = [0.8, 0.0], [-0.2, 0.75]
    vals = [k_numeric(UnitBall(), x, y, segments=s) for s in (8, 16, 32, 64)]
    assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))


def test_k_numeric_unsupported_domain():
    with pytest.raises(UnsupportedOperationError):
        k_numeric(HalfSpace(), [0, 1], [1, 1])
