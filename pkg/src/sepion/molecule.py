"""Three-center secular problem in the rank-1 1s channel.

One proton sits at the origin and two more at distance r from it, in the
x-z plane at polar angles +alpha and -alpha off the x axis (Bohr radii;
the protons are clamped, only the electron is dynamical).  Keeping a
single 1s-channel separable term per center turns the bound-state
condition at energy -x^2 Ry into a 3x3 matrix eigenvalue problem built
from three overlap integrals:

* ``i0``     — a center with itself,
* ``iplus``  — origin with either displaced proton (separation r),
* ``i1``     — the displaced pair (separation 2 r sin alpha).

Exchange symmetry of the displaced pair block-diagonalises the problem
into a pair-antisymmetric factor F1 and a pair-symmetric factor F2; the
electronic ground state is the largest zero of F2.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._roots import refine_bracket, scan_sign_changes

__all__ = [
    "ConsistencyError",
    "Factor",
    "Geometry",
    "IntegralSet",
    "LambdaVector",
    "NoBoundStateError",
    "SecularRoot",
    "excited_root",
    "f_overlap",
    "ground_state_root",
    "i0",
    "integral_set",
    "lambda_vector",
    "secular_factors",
]

# Root-search window and mesh.  The grid is built as {1e-6} union
# {0.01 k}: with x = 1.0 exactly on the grid the symmetric factor is
# -2 iplus^2 < 0 there (since i0(1) = 1), which guarantees a bracket at
# any separation even when the sign-change window is exponentially
# narrow.
_SCAN_LO = 1e-6
_SCAN_HI = 4.0
_SCAN_STEP = 0.01


class NoBoundStateError(RuntimeError):
    """No root of the requested symmetry on the search window."""


class ConsistencyError(RuntimeError):
    """A constructed eigenvector fails its own secular equations."""


class Factor(enum.Enum):
    """Symmetry sector under exchange of the displaced proton pair."""

    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


@dataclass(frozen=True)
class Geometry:
    """Isosceles three-proton arrangement.

    One proton at the origin, the others at r*(cos alpha, 0, +-sin alpha).
    ``alpha = pi/2`` is the symmetric linear chain; smaller alpha closes
    the wedge.  ``r`` in Bohr radii, ``alpha`` in radians.
    """

    r: float
    alpha: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and self.r >= 0.0):
            raise ValueError(f"separation r must be finite and >= 0, got {self.r}")
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha <= math.pi / 2.0):
            raise ValueError(f"alpha must lie in (0, pi/2], got {self.alpha}")

    @property
    def pair_separation(self) -> float:
        """Distance between the two displaced protons, 2 r sin(alpha)."""
        return 2.0 * self.r * math.sin(self.alpha)

    def proton_positions(self) -> np.ndarray:
        """(3, 3) array of proton coordinates: origin, upper, lower."""
        cx = self.r * math.cos(self.alpha)
        cz = self.r * math.sin(self.alpha)
        return np.array([[0.0, 0.0, 0.0], [cx, 0.0, cz], [cx, 0.0, -cz]])


@dataclass(frozen=True)
class IntegralSet:
    """The three distinct overlaps entering the secular matrix at (geom, x)."""

    x: float
    i0: float
    iplus: float
    i1: float


@dataclass(frozen=True)
class SecularRoot:
    """A zero of one symmetry factor: binding parameter plus derived energies."""

    x: float
    factor: Factor

    @property
    def epsilon(self) -> float:
        """Binding magnitude x^2 in Ry; the electron sits at -epsilon."""
        return self.x * self.x

    @property
    def e_electronic(self) -> float:
        return -self.x * self.x


@dataclass(frozen=True)
class LambdaVector:
    """Channel weights (origin, upper, lower) of a secular eigenvector.

    Symmetric-sector vectors are scaled to l0 = 1; the antisymmetric
    sector has no origin weight and is reported as (0, 1, -1).
    ``residual`` records the worst secular-equation defect found when
    the vector was substituted back.
    """

    l0: float
    lplus: float
    lminus: float
    residual: float


def i0(x: float) -> float:
    """Self-overlap of the 1s channel, 2(3 + x)/(1 + x)^3."""
    if not x > 0.0:
        raise ValueError(f"binding parameter x must be positive, got {x}")
    return 2.0 * (3.0 + x) / (1.0 + x) ** 3


def _near_one_series(d: float, u: float) -> float:
    """Taylor factor of the two-center overlap across x = 1 (u = x - 1).

    Multiply by exp(-d).  Quartic truncation: error below ~2e-12 for
    |u| < 1e-3, the region where the closed form loses ~4 eps / u^2 to
    cancellation between its two terms.
    """
    c0 = (d * (d + 3.0) + 3.0) / 3.0
    c1 = -(((d + 6.0) * d + 15.0) * d + 15.0) / 12.0
    c2 = ((((2.0 * d + 15.0) * d + 60.0) * d + 135.0) * d + 135.0) / 120.0
    c3 = -(((((d + 9.0) * d + 45.0) * d + 150.0) * d + 315.0) * d + 315.0) / 360.0
    c4 = (
        (((((2.0 * d + 21.0) * d + 126.0) * d + 525.0) * d + 1575.0) * d + 3150.0) * d
        + 3150.0
    ) / 5040.0
    return (((c4 * u + c3) * u + c2) * u + c1) * u + c0


def f_overlap(d: float, x: float) -> float:
    """Two-center 1s overlap at separation ``d`` and binding parameter ``x``.

    The closed form
        f(d, x) = 16/(x^2-1)^2 * [ (e^-d - e^-dx)/(d (x^2-1))
                                   + e^-d (x^2 - 5 + d (x^2-1))/8 ]
    has two removable singular directions that need guarded branches:

    * ``d -> 0``: replaced for d < 1e-6 by i0(x) minus the quadratic
      term of its even expansion in d.
    * ``x -> 1``: replaced for |x - 1| < 1e-3 by a quartic Taylor
      expansion in x - 1 (the exact x = 1 value is e^-d (1 + d + d^2/3),
      the textbook 1s-1s overlap).

    Elsewhere the exponential difference is evaluated through expm1 and
    x^2 - 1 as (x-1)(x+1), which keeps full relative precision down to
    the branch switch.  Worst-case relative error is a few 1e-10 over a
    stress grid spanning both crossovers.
    """
    if d < 0.0:
        raise ValueError(f"separation d must be >= 0, got {d}")
    if not x > 0.0:
        raise ValueError(f"binding parameter x must be positive, got {x}")
    if d < 1e-6:
        return i0(x) - d * d * (3.0 * x + 1.0) / (3.0 * (1.0 + x) ** 3)
    damp = math.exp(-d)
    if damp == 0.0:
        return 0.0
    u = x - 1.0
    if abs(u) < 1e-3:
        return damp * _near_one_series(d, u)
    v = u * (x + 1.0)
    t_diff = -math.expm1(-d * u) * damp / (d * v)
    t_poly = damp * (x * x - 5.0 + d * v) / 8.0
    return 16.0 / (v * v) * (t_diff + t_poly)


def integral_set(geom: Geometry, x: float) -> IntegralSet:
    """Evaluate the three overlaps at a geometry and binding parameter.

    ``iplus`` is a function of r alone and never sees alpha; ``i1``
    picks up the angle through the pair separation 2 r sin(alpha).
    """
    return IntegralSet(
        x=x,
        i0=i0(x),
        iplus=f_overlap(geom.r, x),
        i1=f_overlap(geom.pair_separation, x),
    )


def secular_factors(geom: Geometry, x: float) -> tuple[float, float]:
    """(pair-antisymmetric, pair-symmetric) secular factors at (geom, x).

    The 3x3 unit-eigenvalue condition factorises under pair exchange:

        F1 = i0 - i1 - 1
        F2 = (i0 - 1)^2 + (i0 - 1) i1 - 2 iplus^2

    A bound state of the corresponding symmetry exists where its factor
    vanishes.
    """
    s = integral_set(geom, x)
    f1 = s.i0 - s.i1 - 1.0
    d0 = s.i0 - 1.0
    f2 = d0 * d0 + d0 * s.i1 - 2.0 * s.iplus * s.iplus
    return f1, f2


def _scan_grid() -> list[float]:
    grid = [_SCAN_LO]
    grid.extend(_SCAN_STEP * k for k in range(1, int(_SCAN_HI / _SCAN_STEP) + 1))
    return grid


def _validated_tol(tol: float) -> float:
    if not 0.0 < tol <= 1e-8:
        raise ValueError(f"tol must lie in (0, 1e-8], got {tol}")
    return tol


def _largest_root(f, factor: Factor) -> SecularRoot | None:
    brackets = scan_sign_changes(f, _scan_grid())
    if not brackets:
        return None
    lo, hi = brackets[-1]
    x = refine_bracket(f, lo, hi)
    residual = abs(f(x))
    if residual >= 1e-10:
        raise ConsistencyError(
            f"refined {factor.value} root x={x!r} has residual {residual:.3e}"
        )
    return SecularRoot(x=x, factor=factor)


def ground_state_root(geom: Geometry, tol: float = 1e-10) -> SecularRoot:
    """Electronic ground state: the largest symmetric-sector root.

    The symmetric factor is scanned over (1e-6, 4.0] with step 0.01 and
    every sign change is bracketed; the factor can vanish twice, and the
    ground state is the largest root (deepest binding epsilon = x^2).
    Brackets are bisected to floating-point exhaustion, so the returned
    root carries |F2| < 1e-10 regardless of ``tol``, which is validated
    (0 < tol <= 1e-8) and kept only as the guaranteed bracket width.

    Raises:
        NoBoundStateError: if the scan finds no symmetric-sector root.
        ValueError: if ``tol`` is out of range.
    """
    _validated_tol(tol)

    def f2(x: float) -> float:
        return secular_factors(geom, x)[1]

    root = _largest_root(f2, Factor.SYMMETRIC)
    if root is None:
        raise NoBoundStateError(
            f"no symmetric-sector root on ({_SCAN_LO}, {_SCAN_HI}] at "
            f"r={geom.r}, alpha={geom.alpha}"
        )
    return root


def excited_root(geom: Geometry, tol: float = 1e-10) -> SecularRoot | None:
    """Largest antisymmetric-sector root, or None when the sector is empty.

    At r = 0 the factor is identically -1 (the antisymmetric combination
    has no support on coincident centers), so the result is None there;
    as r grows the root appears and tends to the isolated-atom x = 1.
    """
    _validated_tol(tol)

    def f1(x: float) -> float:
        return secular_factors(geom, x)[0]

    return _largest_root(f1, Factor.ANTISYMMETRIC)


def _secular_defect(s: IntegralSet, vec: tuple[float, float, float]) -> float:
    """Worst component defect of lambda = M(x) lambda for the given weights."""
    l0_, lp, lm = vec
    r0 = l0_ - (s.i0 * l0_ + s.iplus * (lp + lm))
    rp = lp - (s.iplus * l0_ + s.i0 * lp + s.i1 * lm)
    rm = lm - (s.iplus * l0_ + s.i1 * lp + s.i0 * lm)
    return max(abs(r0), abs(rp), abs(rm))


def lambda_vector(geom: Geometry, root: SecularRoot) -> LambdaVector:
    """Channel weights of the secular eigenvector at a converged root.

    Symmetric sector: (1, mu, mu) with mu = (1 - i0)/(2 iplus).
    Antisymmetric sector: (0, 1, -1).  The vector is substituted back
    into all three secular equations; a defect above 1e-8 means the
    root does not actually satisfy its factor at this geometry.

    Raises:
        ConsistencyError: if the substituted-back defect exceeds 1e-8,
            or the symmetric mixing is undefined because iplus vanished.
    """
    s = integral_set(geom, root.x)
    if root.factor is Factor.SYMMETRIC:
        if s.iplus == 0.0:
            raise ConsistencyError(
                "symmetric mixing undefined: origin-pair overlap vanished"
            )
        mu = (1.0 - s.i0) / (2.0 * s.iplus)
        vec = (1.0, mu, mu)
    else:
        vec = (0.0, 1.0, -1.0)
    residual = _secular_defect(s, vec)
    if residual > 1e-8:
        raise ConsistencyError(
            f"secular defect {residual:.3e} exceeds 1e-8; root x={root.x!r} "
            f"does not satisfy its {root.factor.value} factor at r={geom.r}, "
            f"alpha={geom.alpha}"
        )
    return LambdaVector(l0=vec[0], lplus=vec[1], lminus=vec[2], residual=residual)
