import math

import numpy as np
import pytest

import sepion as sp
from sepion.hydrogen import _phi0_hat, _phi1_hat, _v0_hat, _v1_hat


def test_diagonal_entries_hit_unity_at_the_kept_states():
    assert sp.a_matrix(1.0).a00 == pytest.approx(1.0, abs=1e-15)
    assert sp.a_matrix(0.5).a11 == pytest.approx(1.0, abs=1e-15)


def test_a00_closed_value():
    # 2 (3 + 2) / (1 + 2)^3 = 10/27
    assert sp.a_matrix(2.0).a00 == pytest.approx(10.0 / 27.0, rel=1e-15)


def test_a00_strictly_decreasing():
    grid = np.geomspace(0.02, 10.0, 60)
    values = [sp.a_matrix(x).a00 for x in grid]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_determinant_vanishes_at_both_roots():
    assert abs(sp.secular_det(1.0)) < 1e-14
    assert abs(sp.secular_det(0.5)) < 1e-14


def test_determinant_sign_pattern():
    assert sp.secular_det(0.2) > 0.0
    assert sp.secular_det(0.75) < 0.0
    assert sp.secular_det(2.0) > 0.0


def test_exactly_two_sign_changes_on_wide_window():
    xs = [1e-3 * i for i in range(1, 10001)]
    values = [sp.secular_det(x) for x in xs]
    changes = sum(
        1 for a, b in zip(values, values[1:]) if (a < 0.0) != (b < 0.0)
    )
    assert changes == 2


def test_potential_form_factors_are_shifted_profiles():
    # v_hat must equal (k^2 + eps) phi_hat with eps the channel energy.
    for k in (0.0, 0.3, 1.0, 2.7, 8.0):
        assert _v0_hat(k) == pytest.approx((k * k + 1.0) * _phi0_hat(k), rel=1e-14)
        assert _v1_hat(k) == pytest.approx((k * k + 0.25) * _phi1_hat(k), rel=1e-14)


def test_entries_match_quadrature_on_log_grid():
    closed_entry = {
        (0, 0): lambda a: a.a00,
        (0, 1): lambda a: a.a01,
        (1, 0): lambda a: a.a10,
        (1, 1): lambda a: a.a11,
    }
    for x in np.geomspace(0.02, 10.0, 25):
        a = sp.a_matrix(float(x))
        for (q, m), pick in closed_entry.items():
            reference = pick(a)
            probe = sp.oracle_a_entry(q, m, float(x)).value
            assert probe == pytest.approx(reference, rel=1e-9, abs=1e-12)


def test_find_roots_values():
    roots = sp.find_hydrogen_roots()
    assert len(roots) == 2
    assert roots[0].x == pytest.approx(0.5, abs=1e-10)
    assert roots[1].x == pytest.approx(1.0, abs=1e-10)
    assert roots[0].x < roots[1].x


def test_pure_state_flag_and_mixing():
    lower, upper = sp.find_hydrogen_roots()
    # 1 - a00 vanishes at x = 1: pure 1s channel, ratio reported as zero.
    assert upper.pure_state
    assert upper.lambda_ratio == 0.0
    # At x = 1/2 the ratio numerator a10 itself vanishes analytically.
    assert not lower.pure_state
    assert lower.lambda_ratio == pytest.approx(0.0, abs=1e-12)
    a = sp.a_matrix(lower.x)
    assert lower.lambda_ratio == pytest.approx(a.a10 / (1.0 - a.a00), abs=1e-12)


def test_as_rows_layout():
    a = sp.a_matrix(1.3)
    assert a.as_rows() == ((a.a00, a.a01), (a.a10, a.a11))


@pytest.mark.parametrize("bad_x", [0.0, -1.0])
def test_a_matrix_rejects_nonpositive_x(bad_x):
    with pytest.raises(ValueError):
        sp.a_matrix(bad_x)


def test_find_roots_rejects_bad_window_and_tol():
    with pytest.raises(ValueError):
        sp.find_hydrogen_roots(x_max=1.5)
    with pytest.raises(ValueError):
        sp.find_hydrogen_roots(tol=0.0)
    with pytest.raises(ValueError):
        sp.find_hydrogen_roots(tol=1e-5)
