import math

import pytest

import sepion as sp


def _row(r, e_total):
    """Hand-built scan row; only r and e_total matter to the classifier."""
    return sp.PesRow(
        r=r, x=1.5, epsilon=2.25, e_electronic=-2.25, v_nn=1.0, e_total=e_total
    )


def test_nuclear_repulsion_values():
    equi = sp.Geometry(1.6, math.pi / 6.0)
    assert sp.nuclear_repulsion(equi) == pytest.approx(6.0 / 1.6, rel=1e-12)
    linear = sp.Geometry(2.0, math.pi / 2.0)
    assert sp.nuclear_repulsion(linear) == pytest.approx(2.5, rel=1e-14)


def test_nuclear_repulsion_scales_inversely():
    a = sp.nuclear_repulsion(sp.Geometry(1.1, math.pi / 3.0))
    b = sp.nuclear_repulsion(sp.Geometry(2.2, math.pi / 3.0))
    assert b == pytest.approx(0.5 * a, rel=1e-14)


def test_nuclear_repulsion_diverges_at_origin():
    with pytest.raises(ValueError):
        sp.nuclear_repulsion(sp.Geometry(0.0, math.pi / 3.0))


def test_scan_reproduces_reference_table():
    alpha = sp.REFERENCE_ALPHAS["pi/3"]
    reference = sp.load_reference_roots("pi/3")
    table = sp.scan_r(alpha, [r for r, _ in reference])
    assert len(table.rows) == len(reference)
    for row, (r_ref, x_ref) in zip(table.rows, reference):
        assert row.status == "ok"
        assert row.r == r_ref
        assert row.x == pytest.approx(x_ref, abs=1e-6)
    origin = table.rows[0]
    assert origin.r == 0.0
    assert origin.v_nn is None and origin.e_total is None
    assert origin.e_electronic == pytest.approx(-origin.x**2, rel=1e-14)
    for row in table.rows[1:]:
        assert row.e_total == pytest.approx(row.e_electronic + row.v_nn, rel=1e-14)


def test_scan_input_validation():
    with pytest.raises(ValueError):
        sp.scan_r(math.pi / 3.0, [])
    with pytest.raises(ValueError):
        sp.scan_r(math.pi / 3.0, [-0.5, 1.0])
    with pytest.raises(ValueError):
        sp.scan_r(math.pi / 3.0, [1.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        sp.PesTable(alpha=1.0, rows=(_row(2.0, -1.0), _row(1.0, -2.0)))


def test_stability_on_reference_grid_is_dissociative():
    alpha = sp.REFERENCE_ALPHAS["pi/2"]
    rs = [r for r, _ in sp.load_reference_roots("pi/2")]
    report = sp.stability_report(sp.scan_r(alpha, rs))
    assert report.monotone_decreasing
    assert not report.has_interior_minimum
    assert report.min_r is None and report.min_e_total is None
    assert report.classification == "unstable (monotone decreasing)"
    assert report.rows_used == len(rs) - 1  # the r = 0 row has no total energy


def test_stability_detects_synthetic_minimum():
    table = sp.PesTable(
        alpha=1.0, rows=(_row(1.0, -3.0), _row(2.0, -4.0), _row(3.0, -3.5))
    )
    report = sp.stability_report(table)
    assert report.has_interior_minimum
    assert not report.monotone_decreasing
    assert report.min_r == 2.0
    assert report.min_e_total == -4.0
    assert report.classification == "interior minimum"


def test_stability_non_monotone_without_minimum():
    table = sp.PesTable(
        alpha=1.0, rows=(_row(1.0, -4.0), _row(2.0, -3.0), _row(3.0, -3.5))
    )
    report = sp.stability_report(table)
    assert not report.monotone_decreasing
    assert not report.has_interior_minimum
    assert report.classification == "unstable (no interior minimum)"


def test_stability_needs_three_usable_rows():
    table = sp.PesTable(alpha=1.0, rows=(_row(1.0, -3.0), _row(2.0, -4.0)))
    with pytest.raises(ValueError):
        sp.stability_report(table)


def test_comparison_curve_grid_and_identity():
    table = sp.comparison_curve(math.pi / 6.0, 1.0, 3.0, 5)
    assert [row.r for row in table.rows] == [1.0, 1.5, 2.0, 2.5, 3.0]
    for row in table.rows:
        # Equilateral geometry: repulsion is 6/r exactly.
        assert row.e_total == pytest.approx(-row.x**2 + 6.0 / row.r, rel=1e-12)


def test_comparison_curve_validation():
    with pytest.raises(ValueError):
        sp.comparison_curve(math.pi / 6.0, 0.0, 3.0, 5)
    with pytest.raises(ValueError):
        sp.comparison_curve(math.pi / 6.0, 3.0, 1.0, 5)
    with pytest.raises(ValueError):
        sp.comparison_curve(math.pi / 6.0, 1.0, 3.0, 1)


def test_sharper_wedge_binds_tighter_at_fixed_separation():
    # At fixed r the root (hence binding) grows as the wedge closes.
    roots = {
        key: sp.ground_state_root(sp.Geometry(1.0, alpha)).x
        for key, alpha in sp.REFERENCE_ALPHAS.items()
    }
    assert roots["pi/8"] > roots["pi/6"] > roots["pi/3"] > roots["pi/2"]


def test_reference_tables_shape():
    assert set(sp.reference_keys()) == set(sp.REFERENCE_ALPHAS)
    for key in sp.reference_keys():
        rows = sp.load_reference_roots(key)
        assert len(rows) == 20
        assert rows[0][0] == 0.0
        assert rows[-1][0] == 3.0
        rs = [r for r, _ in rows]
        assert all(b > a for a, b in zip(rs, rs[1:]))
        assert all(x > 1.0 for _, x in rows)


def test_reference_loader_rejects_unknown_key():
    with pytest.raises(ValueError):
        sp.load_reference_roots("pi/5")
