"""Potential-energy scans over the proton separation.

The electronic energy -x^2 from the symmetric-sector root is combined
with the Coulomb repulsion of the clamped protons,

    v_nn = 4/r + 1/(r sin alpha)        (Ry),

to give the total energy surface E(r) at fixed wedge angle.  A row at
r = 0 is meaningful for the electron (all three protons coincide) but
has no finite repulsion, so its v_nn and E_total are left undefined.
Stability analysis of a scanned table asks whether E(r) develops an
interior minimum; for this model it instead decreases monotonically
toward dissociation on every grid studied.
"""

import math
from dataclasses import dataclass

import numpy as np

from .molecule import Geometry, NoBoundStateError, ground_state_root

__all__ = [
    "PesRow",
    "PesTable",
    "StabilityReport",
    "comparison_curve",
    "nuclear_repulsion",
    "scan_r",
    "stability_report",
]


@dataclass(frozen=True)
class PesRow:
    """One scanned separation.

    ``status`` is "ok" or "no-bound-state"; a failed row keeps only its
    r value.  At r = 0 the electronic fields are filled but ``v_nn`` and
    ``e_total`` stay None.
    """

    r: float
    x: float | None
    epsilon: float | None
    e_electronic: float | None
    v_nn: float | None
    e_total: float | None
    status: str = "ok"


@dataclass(frozen=True)
class PesTable:
    """Rows of a separation scan at fixed alpha, strictly increasing in r."""

    alpha: float
    rows: tuple[PesRow, ...]

    def __post_init__(self) -> None:
        rs = [row.r for row in self.rows]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise ValueError("scan rows must be strictly increasing in r")

    def usable_rows(self) -> list[PesRow]:
        """Rows carrying a total energy (bound state found, r > 0)."""
        return [row for row in self.rows if row.e_total is not None]


@dataclass(frozen=True)
class StabilityReport:
    """Shape summary of E_total over a scanned grid."""

    alpha: float
    rows_used: int
    monotone_decreasing: bool
    has_interior_minimum: bool
    min_r: float | None
    min_e_total: float | None
    classification: str


def nuclear_repulsion(geom: Geometry) -> float:
    """Proton-proton Coulomb energy 4/r + 1/(r sin alpha) in Ry.

    Raises:
        ValueError: at r = 0, where the repulsion diverges.
    """
    if geom.r == 0.0:
        raise ValueError("nuclear repulsion diverges at r = 0")
    return 4.0 / geom.r + 1.0 / (geom.r * math.sin(geom.alpha))


def _solve_row(geom: Geometry, tol: float) -> PesRow:
    try:
        root = ground_state_root(geom, tol=tol)
    except NoBoundStateError:
        return PesRow(
            r=geom.r,
            x=None,
            epsilon=None,
            e_electronic=None,
            v_nn=None,
            e_total=None,
            status="no-bound-state",
        )
    if geom.r == 0.0:
        v_nn = None
        e_total = None
    else:
        v_nn = nuclear_repulsion(geom)
        e_total = root.e_electronic + v_nn
    return PesRow(
        r=geom.r,
        x=root.x,
        epsilon=root.epsilon,
        e_electronic=root.e_electronic,
        v_nn=v_nn,
        e_total=e_total,
        status="ok",
    )


def scan_r(alpha: float, r_values, tol: float = 1e-10) -> PesTable:
    """Solve the ground state along a grid of separations at fixed alpha.

    ``r_values`` must be non-empty, non-negative and strictly
    increasing.  Rows are independent of each other; a separation where
    the root search fails is recorded with status "no-bound-state"
    rather than aborting the scan, and rows always come back in input
    order.
    """
    values = [float(r) for r in r_values]
    if not values:
        raise ValueError("r_values must not be empty")
    if any(r < 0.0 for r in values):
        raise ValueError("separations must be >= 0")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("separations must be strictly increasing")
    rows = tuple(_solve_row(Geometry(r=r, alpha=alpha), tol) for r in values)
    return PesTable(alpha=alpha, rows=rows)


def stability_report(table: PesTable) -> StabilityReport:
    """Classify the shape of E_total over a scanned table.

    Only rows with a defined total energy participate; at least three
    are required to say anything about interior structure.

    Raises:
        ValueError: with fewer than three usable rows.
    """
    rows = table.usable_rows()
    if len(rows) < 3:
        raise ValueError(
            f"stability analysis needs at least 3 rows with total energy, "
            f"got {len(rows)}"
        )
    energies = [row.e_total for row in rows]
    monotone = all(b < a for a, b in zip(energies, energies[1:]))
    min_index = None
    for i in range(1, len(rows) - 1):
        if energies[i] < energies[i - 1] and energies[i] < energies[i + 1]:
            if min_index is None or energies[i] < energies[min_index]:
                min_index = i
    if min_index is not None:
        classification = "interior minimum"
    elif monotone:
        classification = "unstable (monotone decreasing)"
    else:
        classification = "unstable (no interior minimum)"
    return StabilityReport(
        alpha=table.alpha,
        rows_used=len(rows),
        monotone_decreasing=monotone,
        has_interior_minimum=min_index is not None,
        min_r=rows[min_index].r if min_index is not None else None,
        min_e_total=energies[min_index] if min_index is not None else None,
        classification=classification,
    )


def comparison_curve(alpha: float, r_min: float, r_max: float, count: int, tol: float = 1e-10) -> PesTable:
    """Scan a uniform separation grid (endpoints included).

    Convenience wrapper for plotting energy curves at several wedge
    angles against each other.
    """
    if not (math.isfinite(r_min) and math.isfinite(r_max) and 0.0 < r_min < r_max):
        raise ValueError(f"need 0 < r_min < r_max, got [{r_min}, {r_max}]")
    if count < 2:
        raise ValueError(f"need at least 2 grid points, got {count}")
    return scan_r(alpha, np.linspace(r_min, r_max, count), tol=tol)
