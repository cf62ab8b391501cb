import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcbounds.errors import DomainError
from qcbounds.ring_invariants import (
    RealInterval,
    alpha_exponent,
    eta_interval,
    gamma2,
    lambda_bounds,
    phi2,
    phi2_complement,
    phi_lower_family,
    phi_upper_family,
    tau2,
)

Ks = st.floats(min_value=1.0, max_value=20.0)
rs = st.floats(min_value=1e-4, max_value=1 - 1e-4)


def _mu(r):
    return mpmath.pi / 2 * mpmath.ellipk(1 - r * r) / mpmath.ellipk(r * r)


def phi_oracle(K, r):
    with mpmath.workdps(40):
        target = _mu(mpmath.mpf(r)) / K
        # mu is monotone in log r; solve with a bracketing method
        u = mpmath.findroot(lambda u: _mu(mpmath.exp(u)) - target, (mpmath.log(1e-15), mpmath.mpf(-1e-15)), solver="illinois")
        return float(mpmath.exp(u))


def tau_oracle(t):
    with mpmath.workdps(40):
        return float(mpmath.pi / _mu(1 / mpmath.sqrt(1 + mpmath.mpf(t))))


@pytest.mark.parametrize("K,r", [(2.0, 0.5), (1.5, 0.1), (5.0, 0.9), (0.5, 0.3), (10.0, 1e-3)])
def test_phi2_oracle(K, r):
    assert phi2(K, r) == pytest.approx(phi_oracle(K, r), rel=1e-12)


def test_phi2_fixed_points():
    assert phi2(3.0, 0.0) == 0.0
    assert phi2(3.0, 1.0) == 1.0
    assert phi2(1.0, 0.37) == 0.37


def test_phi2_complement_is_accurate_near_one():
    K, r = 10.0, 1 / 3
    with mpmath.workdps(40):
        target = _mu(mpmath.mpf(r)) / K
        # complement: mu(p') = pi^2/(4 target)
        y = mpmath.pi**2 / (4 * target)
        u = mpmath.findroot(lambda u: _mu(mpmath.exp(u)) - y, (mpmath.log(1e-15), mpmath.mpf(-1e-15)), solver="illinois")
        pc = mpmath.exp(u)
        expected = float(1 - mpmath.sqrt(1 - pc * pc))
    assert phi2_complement(K, r) == pytest.approx(expected, rel=1e-10)


def test_gamma_and_tau():
    assert gamma2(2.0) == pytest.approx(2 * math.pi / float(_mu(mpmath.mpf(0.5))), rel=1e-13)
    assert tau2(3.0) == pytest.approx(tau_oracle(3.0), rel=1e-13)
    # tau_2(t) = gamma_2(sqrt(1+t)) / 2
    assert tau2(3.0) == pytest.approx(gamma2(2.0) / 2, rel=1e-14)


@pytest.mark.parametrize("fn,arg", [(gamma2, 1.0), (tau2, 0.0), (tau2, -1.0)])
def test_capacity_domains(fn, arg):
    with pytest.raises(DomainError):
        fn(arg)


def test_eta_planar_oracle():
    K, t = 2.0, 1.5
    target = tau_oracle(t) / K
    t_star = float(mpmath.findroot(lambda s: tau_oracle(s) - target, (0.5, 50.0), solver="anderson"))
    eta = eta_interval(K, 2, t)
    assert eta.is_degenerate
    assert eta.lo == pytest.approx(t_star, rel=1e-9)


def test_lambda_bounds():
    assert lambda_bounds(2) == RealInterval(4.0, 4.0)
    lam3 = lambda_bounds(3)
    assert lam3.lo == 4.0 and lam3.hi == pytest.approx(2 * math.e**2, rel=1e-15)


@pytest.mark.parametrize("n", [1, 2.5, True, 0])
def test_dimension_check(n):
    with pytest.raises(DomainError):
        lambda_bounds(n)


def test_interval_invariants():
    with pytest.raises(DomainError):
        RealInterval(2.0, 1.0)
    with pytest.raises(DomainError):
        RealInterval(math.nan, 1.0)
    iv = RealInterval(1.0, 3.0)
    assert iv.width == 2.0 and iv.mid == 2.0 and 2.5 in iv
    assert iv.scale(-1.0) == RealInterval(-3.0, -1.0)
    assert iv.map_decreasing(lambda x: 1 / x) == RealInterval(1 / 3, 1.0)


@given(Ks, rs)
def test_power_bracket_planar(K, r):
    a = alpha_exponent(K, 2)
    p = phi2(K, r)
    tol = 1e-12
    assert r**a <= p + tol
    assert p <= 4 ** (1 - a) * r**a + tol
    assert 4 ** (1 - a) <= 2 ** (1 - 1 / K) * K + tol


@given(Ks, rs)
def test_bracket_contains_planar_value(K, r):
    lam = RealInterval.point(4.0)
    assert phi_upper_family(K, 2, r, lam=lam).contains(phi2(K, r), 1e-12)
    assert phi_lower_family(K, 2, r, lam=lam).contains(phi2(1 / K, r), 1e-12)


@given(Ks, st.floats(0.01, 0.99))
def test_complement_identity(K, r):
    # phi_K(r)^2 + phi_{1/K}(r')^2 = 1
    rc = math.sqrt(1 - r * r)
    assert phi2(K, r) ** 2 + phi2(1 / K, rc) ** 2 == pytest.approx(1.0, abs=1e-10)


@given(st.floats(1.0, 5.0), st.floats(1.0, 5.0), rs)
def test_composition(A, B, r):
    assert phi2(A, phi2(B, r)) == pytest.approx(phi2(A * B, r), abs=1e-10)


@given(Ks, rs, rs)
def test_phi_increasing_in_r(K, r, s):
    if r < s:
        assert phi2(K, r) <= phi2(K, s) + 1e-15


@given(st.integers(3, 6), Ks, rs)
def test_higher_dimensional_brackets_are_ordered(n, K, r):
    up = phi_upper_family(K, n, r)
    lo = phi_lower_family(K, n, r)
    assert 0.0 <= lo.lo <= lo.hi <= r + 1e-15
    assert r - 1e-15 <= up.lo <= up.hi <= 1.0
