"""Figure rendering for scan tables and angular wavefunction grids.

Figures are built with the object-oriented matplotlib API on an explicit
:class:`~matplotlib.figure.Figure`, so no GUI backend is selected and no
pyplot global state is touched; output goes straight to a file, with the
format inferred from the extension (png, pdf, svg).
"""

import math

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .pes import PesTable
from .wavefunction import AngularGrid

__all__ = ["render_grid_figure", "render_pes_figure"]


def _angle_label(alpha: float) -> str:
    frac = alpha / math.pi
    for den in range(2, 13):
        if abs(frac * den - round(frac * den)) < 1e-9:
            num = round(frac * den)
            top = "π" if num == 1 else f"{num}π"
            return f"α = {top}/{den}"
    return f"α = {alpha:.4f} rad"


def render_pes_figure(tables, path, kind: str = "total") -> None:
    """Plot scan tables against separation and write the figure to ``path``.

    ``tables`` is a single :class:`PesTable` or a sequence of them; each
    becomes one labelled curve.  ``kind`` selects the ordinate: "total"
    for E_total (rows without a total energy are skipped) or "root" for
    the binding parameter x.
    """
    if isinstance(tables, PesTable):
        tables = [tables]
    if kind not in ("total", "root"):
        raise ValueError(f"kind must be 'total' or 'root', got {kind!r}")
    fig = Figure(figsize=(6.4, 4.4))
    FigureCanvasAgg(fig)
    ax = fig.subplots()
    for table in tables:
        if kind == "total":
            pairs = [(row.r, row.e_total) for row in table.usable_rows()]
        else:
            pairs = [(row.r, row.x) for row in table.rows if row.x is not None]
        if not pairs:
            continue
        rs, ys = zip(*pairs)
        ax.plot(rs, ys, marker="o", markersize=3.5, linewidth=1.3,
                label=_angle_label(table.alpha))
    ax.set_xlabel("R (Bohr)")
    ax.set_ylabel("$E_{tot}$ (Ry)" if kind == "total" else "binding parameter $x$")
    ax.grid(alpha=0.3)
    ax.legend(frameon=False)
    fig.savefig(path, dpi=150, bbox_inches="tight")


def render_grid_figure(grid: AngularGrid, path) -> None:
    """Heatmap of an angular wavefunction grid, written to ``path``."""
    fig = Figure(figsize=(7.2, 4.0))
    FigureCanvasAgg(fig)
    ax = fig.subplots()
    # pcolormesh wants cell edges; the samples sit at midpoints.
    nt, nphi = grid.theta_count, grid.phi_count
    theta_edges = np.linspace(0.0, math.pi, nt + 1)
    phi_edges = np.linspace(0.0, 2.0 * math.pi, nphi + 1)
    mesh = ax.pcolormesh(phi_edges, theta_edges, grid.values, shading="flat",
                         cmap="viridis")
    ax.set_xlabel("$\\varphi$ (rad)")
    ax.set_ylabel("$\\vartheta$ (rad)")
    ax.set_title(f"$\\psi$ on the sphere $r = {grid.r_fixed:g}$ Bohr")
    ax.invert_yaxis()
    fig.colorbar(mesh, ax=ax, label="$\\psi$")
    fig.savefig(path, dpi=150, bbox_inches="tight")
