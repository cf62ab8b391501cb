import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcbounds.errors import DomainError
from qcbounds.verification import (
    FIG3_COLUMNS,
    CheckResult,
    CurveTable,
    RadialStretch,
    Report,
    default_k_grid,
    default_pair_grid,
    emit_figure,
    figure4_consistency,
    rotation_example,
    run_suite,
    verify_ball_theorem,
    verify_holder,
    verify_identity_suite,
    verify_punctured_example,
)


def test_radial_stretch_dilatation():
    f = RadialStretch.with_dilatation(4.0, 3)
    assert f.a == 2.0 and f.dilatation == 4.0
    g = RadialStretch.with_dilatation(4.0, 3, expanding=False)
    assert g.a == 0.5 and g.dilatation == 4.0


@given(st.floats(0.2, 5.0), st.floats(-0.9, 0.9), st.floats(-0.9, 0.9))
def test_radial_stretch_keeps_direction_and_sphere(a, u, v):
    f = RadialStretch(a, 2)
    x = np.array([u, v])
    if np.linalg.norm(x) > 1e-3:
        y = f(x)
        assert np.linalg.norm(y) == pytest.approx(np.linalg.norm(x) ** a, rel=1e-12)
        assert y @ x > 0
    e = np.array([0.6, 0.8])
    assert np.allclose(f(e), e)


def test_radial_stretch_origin():
    assert np.all(RadialStretch(2.0)(np.zeros(2)) == 0)
    with pytest.raises(DomainError):
        RadialStretch(0.5)(np.zeros(2))


def test_pair_grid_is_seeded():
    a = default_pair_grid(2, 20)
    b = default_pair_grid(2, 20)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
    assert np.all(np.linalg.norm(a[0], axis=1) < 1)


def test_k_grid():
    K = default_k_grid()
    assert len(K) == 64 and K[0] == pytest.approx(1.01) and K[-1] == pytest.approx(10.0)
    assert np.allclose(np.diff(np.log(K)), np.log(10 / 1.01) / 63)


def test_report_lines_format():
    rep = Report([CheckResult("a.ok", True, -0.5), CheckResult("b.bad", False, 0.25, (1.5, 2.0))])
    assert not rep.passed
    assert [c.check_id for c in rep.violations] == ["b.bad"]
    assert rep.lines() == ["PASS a.ok max-slack=-0.5", "FAIL b.bad max-slack=0.25 witness=(1.5,2)"]


def test_identity_suite_passes():
    rep = verify_identity_suite()
    assert rep.passed, str(rep)


@pytest.mark.parametrize("n", [2, 3])
def test_ball_theorem_has_no_violations(n):
    assert verify_ball_theorem(n=n).passed


@pytest.mark.parametrize("eps", [0.1, 0.25, 0.5])
def test_punctured_example(eps):
    assert verify_punctured_example(eps, 2).passed


def test_holder_check():
    assert verify_holder(n=2).passed


def test_rotation_example_equals_pi():
    reduction, arc = rotation_example()
    assert reduction == pytest.approx(math.pi, abs=1e-6)
    assert arc == pytest.approx(math.pi, abs=1e-6)


def test_curve_table_validation():
    with pytest.raises(DomainError):
        CurveTable(["x"], [])
    with pytest.raises(DomainError):
        CurveTable(["K", "y"], [(2.0, 1.0), (1.5, 2.0)])
    with pytest.raises(DomainError):
        CurveTable(["K", "y"], [(2.0,)])


def test_fig3_table_shape():
    t = emit_figure("fig3", 1.05, 3.0, 5)
    assert t.columns == FIG3_COLUMNS and len(t.rows) == 5
    lines = t.to_csv().split("\n")
    assert lines[0] == "K,MV_lo,MV_hi,VZ_lo,VZ_hi,Kr" and lines[-1] == ""
    assert all(not line.endswith(",") for line in lines)


def test_fig4_blank_bv_outside_range():
    t = emit_figure("fig4", 1.1, 2.0, 4)
    assert t.column("logBV")[-1] is None
    assert ",," in t.to_csv().split("\n")[-2]


def test_emit_figure_rejects_bad_grids():
    for args in (("fig5", 1.1, 2, 3), ("fig3", 1.0, 2, 3), ("fig3", 1.1, 2, 1), ("fig3", 1.1, 2, 3, "cubic")):
        with pytest.raises(DomainError):
            emit_figure(*args)


def test_figure4_strict_checks_report_crossing():
    rep = figure4_consistency(np.linspace(1.01, 1.32, 32))
    status = {c.check_id: c for c in rep.checks}
    assert status["fig4.mori_lt_fv"].passed and status["fig4.bv_lt_fv"].passed
    # BV exceeds the conjectured constant beyond K ~ 1.3088
    assert not status["fig4.bv_lt_mori"].passed
    assert status["fig4.bv_lt_mori"].witness[0] > 1.3088


def test_run_suite_rejects_unknown():
    with pytest.raises(DomainError):
        run_suite("bogus")
    with pytest.raises(DomainError):
        run_suite("identities", tol=-1.0)
