import math

import numpy as np
import pytest

import sepion as sp
from sepion.oracle import oracle_a_entry, oracle_i_integral, oracle_lambda_projection


def test_overlap_oracle_unit_case():
    result = oracle_i_integral(0.0, 1.0)
    assert result.value == pytest.approx(1.0, abs=1e-10)
    assert result.abs_error_estimate <= 1e-9
    assert result.evaluations > 0


def test_overlap_oracle_agrees_with_closed_form():
    rng = np.random.default_rng(42)
    for _ in range(20):
        d = rng.uniform(0.1, 6.0)
        x = rng.uniform(0.3, 3.0)
        closed = sp.f_overlap(d, x)
        result = oracle_i_integral(d, x)
        dev = abs(result.value - closed)
        assert dev <= 1e-8 * max(abs(closed), 1e-12)
        # Honesty of the error accounting: the actual deviation must be
        # covered by the reported estimate plus closed-form roundoff.
        assert dev <= 10.0 * result.abs_error_estimate + 1e-9 * abs(closed)


def test_overlap_oracle_oscillatory_path():
    # d > 4 takes the half-period summation route.
    closed = sp.f_overlap(12.0, 1.3)
    result = oracle_i_integral(12.0, 1.3)
    assert result.value == pytest.approx(closed, abs=1e-10)


def test_overlap_oracle_validation():
    with pytest.raises(ValueError):
        oracle_i_integral(-0.5, 1.0)
    with pytest.raises(ValueError):
        oracle_i_integral(1.0, 0.0)
    with pytest.raises(ValueError):
        oracle_i_integral(math.inf, 1.0)


def test_matrix_entry_oracle_eigenvalue_points():
    # The diagonal entries equal 1 exactly at their channel eigenvalues.
    assert oracle_a_entry(0, 0, 1.0).value == pytest.approx(1.0, abs=1e-10)
    assert oracle_a_entry(1, 1, 0.5).value == pytest.approx(1.0, abs=1e-10)


def test_matrix_entry_oracle_agrees_with_closed_form():
    for x in (0.3, 0.9, 2.0, 5.0):
        closed = sp.a_matrix(x).as_rows()
        for q in (0, 1):
            for m in (0, 1):
                result = oracle_a_entry(q, m, x)
                assert result.value == pytest.approx(
                    closed[q][m], rel=1e-9, abs=1e-12
                )


def test_matrix_entry_oracle_validation():
    with pytest.raises(ValueError):
        oracle_a_entry(2, 0, 1.0)
    with pytest.raises(ValueError):
        oracle_a_entry(0, -1, 1.0)
    with pytest.raises(ValueError):
        oracle_a_entry(0, 0, -1.0)


def test_projection_oracle_recovers_eigenvector():
    # Scalene-symmetric case: the two displaced weights agree and the
    # ratio to the origin weight is the mixing coefficient.
    geom = sp.Geometry(1.0, math.pi / 2.0)
    root = sp.ground_state_root(geom)
    params = sp.raw_params(geom, root)
    p0 = oracle_lambda_projection(geom, params, 0)
    pp = oracle_lambda_projection(geom, params, 1)
    pm = oracle_lambda_projection(geom, params, 2)
    assert pp.value == pytest.approx(pm.value, rel=1e-6)
    assert pp.value / p0.value == pytest.approx(params.mixing, rel=1e-5)
    # Plug the recovered vector back into the secular system.
    s = sp.integral_set(geom, root.x)
    l0, lp, lm = 1.0, pp.value / p0.value, pm.value / p0.value
    r0 = l0 - (s.i0 * l0 + s.iplus * (lp + lm))
    rp = lp - (s.iplus * l0 + s.i0 * lp + s.i1 * lm)
    assert abs(r0) <= 1e-6
    assert abs(rp) <= 1e-6


def test_projection_oracle_validation(equilateral, equilateral_params):
    geom, _ = equilateral
    with pytest.raises(ValueError):
        oracle_lambda_projection(geom, equilateral_params, 3)
    other = sp.Geometry(2.0, math.pi / 3.0)
    with pytest.raises(ValueError):
        oracle_lambda_projection(other, equilateral_params, 0)
