"""Independent quadrature routes to the package's closed-form quantities.

Everything here recomputes, by direct numerical integration, numbers the
rest of the package obtains analytically: the two-center overlap, the
rank-2 response-matrix entries, and the channel weights of the
three-center eigenvector (recovered as position-space projections onto
1s orbitals at each proton).  Production code never calls this module;
the test suite compares the two routes against each other, so any
algebra slip in the closed forms and any quadrature defect here show up
as a disagreement.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .hydrogen import _phi0_hat, _phi1_hat, _v0_hat, _v1_hat
from .molecule import Geometry
from .wavefunction import PsiParams, QuadratureConvergenceError, _cartesian_psi, _integrate_about

__all__ = [
    "QuadratureResult",
    "oracle_a_entry",
    "oracle_i_integral",
    "oracle_lambda_projection",
]

_PREFACTOR = 32.0 / math.pi
_QUAD_OPTS = {"epsabs": 1e-13, "epsrel": 1e-12, "limit": 400}
# Momentum cutoff for the oscillatory path; the integrand envelope
# beyond k is 1/(d k^7), giving the tail bound used below.
_OSC_CUTOFF = 80.0
_EST_CEILING = 1e-9

# Resolution ladder for the projection integrals (radial nodes per
# panel, cos-theta nodes, azimuth nodes).
_PROJECTION_LEVELS = ((48, 64, 128), (64, 96, 192), (96, 144, 288))
_PROJECTION_RTOL = 1e-6

_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)


@dataclass(frozen=True)
class QuadratureResult:
    """A numerically integrated value with its error accounting."""

    value: float
    abs_error_estimate: float
    evaluations: int


def _checked_quad(integrand, lo, hi, **overrides) -> tuple[float, float, int]:
    opts = {**_QUAD_OPTS, **overrides}
    result = quad(integrand, lo, hi, full_output=1, **opts)
    if len(result) > 3:
        raise QuadratureConvergenceError(
            f"integrator reported trouble on [{lo}, {hi}]: {result[3].strip()}"
        )
    value, err, info = result
    return value, err, info["neval"]


def _sinc_j0(s: float) -> float:
    return math.sin(s) / s if s != 0.0 else 1.0


def oracle_i_integral(d: float, x: float) -> QuadratureResult:
    """Two-center overlap by momentum-space quadrature.

    Integrates (32/pi) k^2 j0(k d) / ((k^2+1)^3 (k^2+x^2)) over the
    half-line.  For d <= 4 the oscillation is mild and the integral is
    split once at k = max(1, x); beyond that, half-period panels of
    length pi/d are summed up to k = 80 and the remaining tail is
    charged to the error estimate via the envelope bound 1/(6 d k^6).

    Raises:
        ValueError: for d < 0 or x <= 0.
        QuadratureConvergenceError: if the integrator reports trouble or
            the accumulated error estimate exceeds 1e-9.
    """
    if d < 0.0 or not math.isfinite(d):
        raise ValueError(f"separation d must be finite and >= 0, got {d}")
    if not x > 0.0:
        raise ValueError(f"binding parameter x must be positive, got {x}")

    def integrand(k: float) -> float:
        return k * k * _sinc_j0(k * d) / ((k * k + 1.0) ** 3 * (k * k + x * x))

    split = max(1.0, x)
    value, err, evaluations = _checked_quad(integrand, 0.0, split)
    if d <= 4.0:
        v, e, n = _checked_quad(integrand, split, np.inf)
        value += v
        err += e
        evaluations += n
    else:
        period = math.pi / d
        lo = split
        while lo < _OSC_CUTOFF:
            hi = min(lo + period, _OSC_CUTOFF)
            v, e, n = _checked_quad(integrand, lo, hi, epsabs=1e-14)
            value += v
            err += e
            evaluations += n
            lo = hi
        err += 1.0 / (6.0 * d * _OSC_CUTOFF**6)
    value *= _PREFACTOR
    err *= _PREFACTOR
    if err > _EST_CEILING:
        raise QuadratureConvergenceError(
            f"overlap quadrature error estimate {err:.3e} exceeds {_EST_CEILING:g} "
            f"at d={d}, x={x}"
        )
    return QuadratureResult(value=value, abs_error_estimate=err, evaluations=evaluations)


def oracle_a_entry(q: int, m: int, x: float) -> QuadratureResult:
    """Response-matrix entry (q, m) by momentum-space quadrature.

    Integrates k^2 v_q(k) phi_m(k) / ((k^2 + x^2) 2 pi^2) over the
    half-line, pairing the potential form factor of row q with the
    channel profile of column m — the same pairing the closed forms use.

    Raises:
        ValueError: for q or m outside {0, 1}, or x <= 0.
        QuadratureConvergenceError: on integrator trouble or an error
            estimate above 1e-9.
    """
    if q not in (0, 1) or m not in (0, 1):
        raise ValueError(f"channel indices must be 0 or 1, got q={q}, m={m}")
    if not x > 0.0:
        raise ValueError(f"binding parameter x must be positive, got {x}")
    row = (_v0_hat, _v1_hat)[q]
    col = (_phi0_hat, _phi1_hat)[m]
    scale = 1.0 / (2.0 * math.pi**2)

    def integrand(k: float) -> float:
        return scale * k * k * row(k) * col(k) / (k * k + x * x)

    split = max(1.0, x)
    v1, e1, n1 = _checked_quad(integrand, 0.0, split)
    v2, e2, n2 = _checked_quad(integrand, split, np.inf)
    err = e1 + e2
    if err > _EST_CEILING:
        raise QuadratureConvergenceError(
            f"matrix-entry quadrature error estimate {err:.3e} exceeds "
            f"{_EST_CEILING:g} at q={q}, m={m}, x={x}"
        )
    return QuadratureResult(value=v1 + v2, abs_error_estimate=err, evaluations=n1 + n2)


def oracle_lambda_projection(geom: Geometry, params: PsiParams, center: int) -> QuadratureResult:
    """Channel weight recovered as <1s at proton ``center`` | psi>.

    The projection of the state onto a unit 1s orbital exp(-s)/sqrt(pi)
    planted on one proton is proportional to that proton's channel
    weight, with the same constant for all three centers — so the three
    projections reproduce the eigenvector (l0, l+, l-) up to overall
    scale.  The integral runs over spherical panels about the chosen
    proton, with radial splits at the distances to the other two (psi
    has cusps there); a resolution ladder supplies the error estimate.

    Args:
        geom: proton arrangement.
        params: state parameters; ``params.geom`` must equal ``geom``.
        center: proton index — 0 the origin, 1 the +alpha proton,
            2 the -alpha proton.

    Raises:
        ValueError: for a bad center index or mismatched geometry.
        QuadratureConvergenceError: if the ladder fails to stabilise.
    """
    if center not in (0, 1, 2):
        raise ValueError(f"center must be 0, 1 or 2, got {center}")
    if params.geom != geom:
        raise ValueError("params were built for a different geometry")
    positions = geom.proton_positions()
    origin = positions[center]
    split_radii = tuple(
        float(np.linalg.norm(positions[j] - origin)) for j in range(3) if j != center
    )

    def integrand(points):
        s = np.linalg.norm(points - origin, axis=-1)
        return _INV_SQRT_PI * np.exp(-s) * _cartesian_psi(points, params)

    previous = None
    evaluations = 0
    delta = math.inf
    for nr, nt, nphi in _PROJECTION_LEVELS:
        value, n = _integrate_about(integrand, origin, split_radii, nr, nt, nphi)
        evaluations += n
        if previous is not None:
            delta = abs(value - previous)
            if delta < _PROJECTION_RTOL * max(1.0, abs(value)):
                return QuadratureResult(
                    value=value, abs_error_estimate=delta, evaluations=evaluations
                )
        previous = value
    raise QuadratureConvergenceError(
        f"projection quadrature did not stabilise (last change {delta:.3e}) "
        f"at center {center}, r={geom.r}, alpha={geom.alpha}"
    )
