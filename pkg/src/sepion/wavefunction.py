"""Three-center electronic wavefunction and its normalization.

The symmetric-sector bound state at binding parameter x is

    psi(r) = N * [ g(|r|) + mu * ( g(|r - R+|) + g(|r - R-|) ) ],
    g(s)   = (exp(-s) - exp(-x s)) / s,

with the mixing mu = (1 - i0)/(2 iplus) fixed by the secular eigenvector
and R+- the displaced proton positions.  g has a removable s -> 0 limit
(x - 1) and a cusp at each proton, so the normalization integral is
split into one quadrature per proton channel, each using Gauss-Legendre
radial panels whose boundaries sit exactly on the cusp radii about that
center; polar angles use Gauss-Legendre in cos(theta) and the periodic
azimuth a uniform midpoint rule.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss

from .molecule import Factor, Geometry, SecularRoot, lambda_vector

__all__ = [
    "AngularGrid",
    "PsiParams",
    "QuadratureConvergenceError",
    "normalize",
    "psi",
    "psi_grid",
    "raw_params",
    "rho_pm",
]

# Resolution ladder (radial nodes per panel, cos-theta nodes, azimuth
# nodes) for the normalization integral; climbing stops when successive
# levels agree to _NORM_RTOL.
_NORM_LEVELS = ((32, 48, 96), (56, 80, 160), (96, 144, 288), (128, 192, 384))
_NORM_RTOL = 1e-6


class QuadratureConvergenceError(RuntimeError):
    """Successive quadrature refinements failed to agree."""


@dataclass(frozen=True)
class PsiParams:
    """Everything needed to evaluate the symmetric-sector state.

    ``norm`` is 1 for the raw (unnormalized) state; :func:`normalize`
    returns a copy with norm = 1/sqrt(<psi|psi>).
    """

    geom: Geometry
    x: float
    mixing: float
    norm: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and self.x > 0.0):
            raise ValueError(f"binding parameter x must be positive, got {self.x}")
        if not math.isfinite(self.mixing):
            raise ValueError(f"mixing must be finite, got {self.mixing}")
        if not (math.isfinite(self.norm) and self.norm > 0.0):
            raise ValueError(f"norm must be positive, got {self.norm}")


@dataclass(frozen=True)
class AngularGrid:
    """psi sampled on the midpoint (theta, phi) grid of a fixed sphere."""

    r_fixed: float
    thetas: np.ndarray = field(repr=False)
    phis: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.values.shape != (self.thetas.size, self.phis.size):
            raise ValueError(
                f"values shape {self.values.shape} does not match grid "
                f"({self.thetas.size}, {self.phis.size})"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("grid contains non-finite values")

    @property
    def theta_count(self) -> int:
        return self.thetas.size

    @property
    def phi_count(self) -> int:
        return self.phis.size


def rho_pm(r, theta, phi, geom: Geometry, sign: int):
    """Distance from the spherical point (r, theta, phi) to a displaced proton.

    ``sign`` +1 selects the proton at +alpha, -1 the one at -alpha.  The
    law-of-cosines radicand

        r^2 + R^2 - 2 r R (sin th cos ph cos a +- cos th sin a)

    vanishes exactly at the proton, so roundoff is clamped at zero
    before the square root.  Accepts scalars or broadcastable arrays.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    big_r = geom.r
    proj = np.sin(theta) * np.cos(phi) * math.cos(geom.alpha)
    proj = proj + sign * np.cos(theta) * math.sin(geom.alpha)
    radicand = r * r + big_r * big_r - 2.0 * r * big_r * proj
    return np.sqrt(np.maximum(radicand, 0.0))


def _g_profile(s, x: float):
    """Radial channel profile g(s) = (exp(-s) - exp(-x s))/s.

    Evaluated as -expm1(-(x-1) s) exp(-s)/s so nearby exponentials are
    differenced at full relative precision; below s = 1e-8 the removable
    limit x - 1 is returned directly.
    """
    s = np.asarray(s, dtype=float)
    small = s < 1e-8
    safe = np.where(small, 1.0, s)
    vals = -np.expm1(-(x - 1.0) * safe) * np.exp(-safe) / safe
    return np.where(small, x - 1.0, vals)


def psi(r, theta, phi, params: PsiParams):
    """Evaluate the state at spherical coordinates about the origin proton."""
    term0 = _g_profile(np.asarray(r, dtype=float), params.x)
    termp = _g_profile(rho_pm(r, theta, phi, params.geom, +1), params.x)
    termm = _g_profile(rho_pm(r, theta, phi, params.geom, -1), params.x)
    return params.norm * (term0 + params.mixing * (termp + termm))


def raw_params(geom: Geometry, root: SecularRoot) -> PsiParams:
    """Parameters of the raw (norm = 1) state for a symmetric-sector root.

    The mixing comes from the secular eigenvector, including its
    substitute-back consistency check.

    Raises:
        ValueError: if the root is not from the symmetric sector.
    """
    if root.factor is not Factor.SYMMETRIC:
        raise ValueError("wavefunction parameters require a symmetric-sector root")
    weights = lambda_vector(geom, root)
    return PsiParams(geom=geom, x=root.x, mixing=weights.lplus, norm=1.0)


def _cartesian_psi(points: np.ndarray, params: PsiParams):
    """psi at an (..., 3) array of Cartesian points."""
    centers = params.geom.proton_positions()
    weights = (1.0, params.mixing, params.mixing)
    total = np.zeros(points.shape[:-1])
    for center, weight in zip(centers, weights):
        total += weight * _g_profile(
            np.linalg.norm(points - center, axis=-1), params.x
        )
    return params.norm * total


def _radial_panels(split_radii, tail_offsets=(2.0, 6.0, 14.0, 36.0)) -> list[float]:
    """Panel boundaries: 0, the cusp radii, then a stretched tail.

    Wide panels below the outermost cusp are subdivided so no single
    Gauss-Legendre panel has to resolve many decay lengths at once.
    """
    cusps = sorted({s for s in split_radii if s > 1e-12})
    bounds = [0.0]
    for s in cusps:
        prev = bounds[-1]
        width = s - prev
        if width > 12.0:
            pieces = int(math.ceil(width / 12.0))
            bounds.extend(prev + width * k / pieces for k in range(1, pieces))
        if s - bounds[-1] > 1e-12:
            bounds.append(s)
    anchor = bounds[-1]
    bounds.extend(anchor + off for off in tail_offsets)
    return bounds


def _integrate_about(integrand, center: np.ndarray, split_radii, nr: int, nt: int, nphi: int) -> tuple[float, int]:
    """Integrate a scalar field over R^3 in spherical panels about ``center``.

    ``integrand`` maps an (..., 3) Cartesian array to values.  Radial
    panels split at ``split_radii`` (cusp distances from the center) use
    ``nr``-point Gauss-Legendre each; angles use ``nt``-point
    Gauss-Legendre in cos(theta) and an ``nphi``-point midpoint rule in
    azimuth.  Returns (integral, number of integrand evaluations).
    """
    cos_nodes, cos_weights = leggauss(nt)
    phis = (np.arange(nphi) + 0.5) * (2.0 * math.pi / nphi)
    phi_weight = 2.0 * math.pi / nphi
    sin_nodes = np.sqrt(1.0 - cos_nodes**2)
    dirs = np.stack(
        [
            np.outer(sin_nodes, np.cos(phis)),
            np.outer(sin_nodes, np.sin(phis)),
            np.outer(cos_nodes, np.ones(nphi)),
        ],
        axis=-1,
    )
    gauss_x, gauss_w = leggauss(nr)
    bounds = _radial_panels(split_radii)
    total = 0.0
    evaluations = 0
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        radii = 0.5 * (hi - lo) * gauss_x + 0.5 * (lo + hi)
        radial_w = 0.5 * (hi - lo) * gauss_w
        points = center + radii[:, None, None, None] * dirs[None, :, :, :]
        values = integrand(points)
        evaluations += values.size
        total += np.einsum("i,j,ijk->", radial_w * radii * radii, cos_weights, values)
    return total * phi_weight, evaluations


def _norm_integral(params: PsiParams) -> tuple[float, float, int]:
    """<psi|psi> for the raw state, with a two-level convergence check.

    Expanding the square against the three channels gives

        <psi|psi> = J_0 + mu J_+ + mu J_-,   J_q = integral g(|p - c_q|) psi(p),

    and each J_q is integrated about its own center so the dominant cusp
    always sits at the panel origin; a single origin-centered quadrature
    would starve the distant lumps of angular resolution once the protons
    are many Bohr apart.  The layout is mirror symmetric in z, which
    swaps the two displaced centers and preserves psi, so J_+ = J_- and
    only one displaced channel is computed.

    Returns (value, relative error estimate, evaluations).

    Raises:
        QuadratureConvergenceError: if the finest two levels disagree by
            more than the acceptance threshold.
    """
    centers = params.geom.proton_positions()

    def channel(q: int, nr: int, nt: int, nphi: int) -> tuple[float, int]:
        center = centers[q]
        splits = [
            float(np.linalg.norm(centers[j] - center))
            for j in range(len(centers))
            if j != q
        ]

        def integrand(points):
            s = np.linalg.norm(points - center, axis=-1)
            return _g_profile(s, params.x) * _cartesian_psi(points, params)

        return _integrate_about(integrand, center, splits, nr, nt, nphi)

    previous = None
    evaluations = 0
    rel = math.inf
    for nr, nt, nphi in _NORM_LEVELS:
        j_origin, n0 = channel(0, nr, nt, nphi)
        j_displaced, n1 = channel(1, nr, nt, nphi)
        value = j_origin + 2.0 * params.mixing * j_displaced
        evaluations += n0 + n1
        if previous is not None:
            rel = abs(value - previous) / max(abs(value), 1e-300)
            if rel < _NORM_RTOL:
                return value, rel, evaluations
        previous = value
    raise QuadratureConvergenceError(
        f"normalization quadrature did not stabilise to {_NORM_RTOL:g} "
        f"(last relative change {rel:.3e})"
    )


def normalize(geom: Geometry, root: SecularRoot) -> PsiParams:
    """Parameters of the unit-norm state for a symmetric-sector root.

    The norm integral is evaluated on a ladder of panel resolutions and
    accepted once two successive levels agree to 1e-6 relative.

    Raises:
        QuadratureConvergenceError: if the ladder fails to stabilise or
            the integral is not positive.
        ValueError: if the root is not from the symmetric sector.
    """
    params = raw_params(geom, root)
    value, _, _ = _norm_integral(params)
    if not value > 0.0:
        raise QuadratureConvergenceError(
            f"normalization integral came out non-positive: {value!r}"
        )
    return PsiParams(geom=geom, x=params.x, mixing=params.mixing, norm=1.0 / math.sqrt(value))


def psi_grid(
    r_fixed: float,
    geom: Geometry,
    root: SecularRoot,
    theta_count: int = 90,
    phi_count: int = 180,
    params: PsiParams | None = None,
) -> AngularGrid:
    """Sample psi on the midpoint (theta, phi) grid of the sphere |r| = r_fixed.

    Cell centers theta_i = (i + 1/2) pi/nt and phi_j = (j + 1/2) 2 pi/nphi
    keep the poles and the azimuthal seam off-grid.  By default the raw
    (norm = 1) state built from ``root`` is sampled; pass ``params`` to
    sample a normalized or otherwise customised state instead.
    """
    if not r_fixed > 0.0:
        raise ValueError(f"sphere radius must be positive, got {r_fixed}")
    if theta_count < 2 or phi_count < 2:
        raise ValueError("grid needs at least 2 nodes per angle")
    if params is None:
        params = raw_params(geom, root)
    thetas = (np.arange(theta_count) + 0.5) * (math.pi / theta_count)
    phis = (np.arange(phi_count) + 0.5) * (2.0 * math.pi / phi_count)
    theta_mesh, phi_mesh = np.meshgrid(thetas, phis, indexing="ij")
    values = psi(np.full_like(theta_mesh, r_fixed), theta_mesh, phi_mesh, params)
    return AngularGrid(r_fixed=r_fixed, thetas=thetas, phis=phis, values=values)
