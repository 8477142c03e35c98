import math

import numpy as np
import pytest

import sepion as sp
from sepion.plots import render_grid_figure, render_pes_figure


@pytest.fixture(scope="module")
def small_table():
    return sp.scan_r(math.pi / 6.0, [1.2, 1.6, 2.0, 2.4])


def test_pes_figure_total(small_table, tmp_path):
    path = tmp_path / "curve.png"
    render_pes_figure(small_table, path)
    assert path.read_bytes()[:4] == b"\x89PNG"


def test_pes_figure_root_kind_and_multiple_tables(small_table, tmp_path):
    other = sp.scan_r(math.pi / 2.0, [1.2, 1.6, 2.0, 2.4])
    path = tmp_path / "roots.png"
    render_pes_figure([small_table, other], path, kind="root")
    assert path.read_bytes()[:4] == b"\x89PNG"


def test_pes_figure_rejects_unknown_kind(small_table, tmp_path):
    with pytest.raises(ValueError):
        render_pes_figure(small_table, tmp_path / "x.png", kind="banana")


def test_pes_figure_pdf_output(small_table, tmp_path):
    path = tmp_path / "curve.pdf"
    render_pes_figure(small_table, path)
    assert path.read_bytes()[:5] == b"%PDF-"


def test_grid_figure(tmp_path):
    thetas = (np.arange(8) + 0.5) * (math.pi / 8)
    phis = (np.arange(12) + 0.5) * (2.0 * math.pi / 12)
    values = np.cos(thetas)[:, None] * np.ones(12)
    grid = sp.AngularGrid(r_fixed=1.6, thetas=thetas, phis=phis, values=values)
    path = tmp_path / "grid.png"
    render_grid_figure(grid, path)
    assert path.read_bytes()[:4] == b"\x89PNG"
