"""Shared fixtures: the workhorse equilateral geometry and a closed-form
norm oracle used to cross-check the quadrature normalization."""

import math

import pytest

import sepion as sp


@pytest.fixture(scope="session")
def equilateral():
    """Geometry and ground-state root at r = 1.6, alpha = pi/6."""
    geom = sp.Geometry(r=1.6, alpha=math.pi / 6.0)
    root = sp.ground_state_root(geom)
    return geom, root


@pytest.fixture(scope="session")
def equilateral_params(equilateral):
    """Unit-norm state parameters at the equilateral anchor geometry.

    Session-scoped because the normalization quadrature is the slowest
    single call in the package.
    """
    geom, root = equilateral
    return sp.normalize(geom, root)


def _two_center(a: float, b: float, d: float) -> float:
    """Overlap of exp(-a s)/s and exp(-b s')/s' on centers d apart.

    Standard closed form 4 pi (e^-ad - e^-bd) / (d (b^2 - a^2)), with
    the coincident and equal-exponent limits taken analytically.  This
    is derived independently of anything in the package and serves as
    the norm oracle.
    """
    if d < 1e-12:
        return 4.0 * math.pi / (a + b)
    if abs(a - b) < 1e-12:
        return 2.0 * math.pi * math.exp(-a * d) / a
    return 4.0 * math.pi * (math.exp(-a * d) - math.exp(-b * d)) / (d * (b * b - a * a))


def _pair_overlap(x: float, d: float) -> float:
    """<h|h'> for h(s) = (e^-s - e^-xs)/s on centers d apart.

    The three two-center terms cancel to order (x-1)^2, so for x near 1
    the combination is replaced by its leading series
    (x-1)^2 pi e^-d (1 + d + d^2/3), checked against 60-digit arithmetic.
    """
    eps = x - 1.0
    if abs(eps) < 1e-5:
        return eps * eps * math.pi * math.exp(-d) * (1.0 + d + d * d / 3.0)
    return (
        _two_center(1.0, 1.0, d)
        - 2.0 * _two_center(1.0, x, d)
        + _two_center(x, x, d)
    )


@pytest.fixture(scope="session")
def closed_norm_squared():
    """Callable giving <psi_raw | psi_raw> from closed-form overlaps."""

    def compute(geom: sp.Geometry, x: float, mixing: float) -> float:
        return (
            (1.0 + 2.0 * mixing * mixing) * _pair_overlap(x, 0.0)
            + 4.0 * mixing * _pair_overlap(x, geom.r)
            + 2.0 * mixing * mixing * _pair_overlap(x, geom.pair_separation)
        )

    return compute
