"""Rank-2 separable model of the hydrogen atom.

The electron-proton attraction -2/r (Rydberg units: hbar = 2m = e^2/2 = 1,
lengths in Bohr radii) is replaced by a rank-2 separable expansion over the
1s and 2s channels.  A bound state at energy -x^2 Ry exists exactly where
the 2x2 response matrix A(x) has unit eigenvalue, i.e. where
det(A(x) - I) = 0.  The truncation keeps the 1s and 2s levels exactly:
the determinant vanishes at x = 1 (-1 Ry) and x = 1/2 (-1/4 Ry) and
nowhere else on the physical half-line.

The closed-form entries below come from contour integration of the
momentum-space form factors; the form factors themselves are kept as
plain functions so the quadrature oracle can integrate the same
integrands independently of the closed forms.
"""

import math
from dataclasses import dataclass

from ._roots import refine_bracket, scan_sign_changes

__all__ = [
    "AMatrix2",
    "BracketingError",
    "HydrogenRoot",
    "a_matrix",
    "find_hydrogen_roots",
    "secular_det",
]

_SQRT_PI = math.sqrt(math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_SQRT_2 = math.sqrt(2.0)

# Scan step for the root search; the two roots are separated by 1/2, so a
# 1e-3 mesh isolates them with three orders of margin.
_SCAN_STEP = 1e-3


def _phi0_hat(k: float) -> float:
    """Momentum profile of the 1s channel."""
    return 8.0 * _SQRT_PI / (k * k + 1.0) ** 2


def _phi1_hat(k: float) -> float:
    """Momentum profile of the 2s channel."""
    kk = k * k
    return 32.0 * _SQRT_2PI * (4.0 * kk - 1.0) / (4.0 * kk + 1.0) ** 3


def _v0_hat(k: float) -> float:
    """1s potential form factor, (k^2 + 1) * phi0."""
    return 8.0 * _SQRT_PI / (k * k + 1.0)


def _v1_hat(k: float) -> float:
    """2s potential form factor, (k^2 + 1/4) * phi1."""
    kk = k * k
    return 8.0 * _SQRT_2PI * (4.0 * kk - 1.0) / (4.0 * kk + 1.0) ** 2


@dataclass(frozen=True)
class AMatrix2:
    """Rank-2 response matrix evaluated at binding parameter x."""

    a00: float
    a01: float
    a10: float
    a11: float

    def as_rows(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.a00, self.a01), (self.a10, self.a11))


@dataclass(frozen=True)
class HydrogenRoot:
    """A zero of the secular determinant.

    ``lambda_ratio`` is the channel mixing a10/(1 - a00) of the
    associated eigenvector.  ``pure_state`` marks the root where
    1 - a00 itself vanishes: there the state is a pure 1s channel and
    the ratio is reported as 0 rather than divided out.
    """

    x: float
    lambda_ratio: float
    pure_state: bool = False


class BracketingError(RuntimeError):
    """The sign-change scan did not isolate the expected number of roots."""


def a_matrix(x: float) -> AMatrix2:
    """Closed-form response matrix at binding parameter ``x > 0``.

    Args:
        x: binding parameter; the candidate state sits at energy -x^2 Ry.

    Returns:
        The four entries as an :class:`AMatrix2`.

    Raises:
        ValueError: if ``x`` is not strictly positive.
    """
    if not x > 0.0:
        raise ValueError(f"binding parameter x must be positive, got {x}")
    one = 1.0 + x
    two = 1.0 + 2.0 * x
    a00 = 2.0 * (3.0 + x) / one**3
    a11 = 2.0 * (8.0 * x**3 + 20.0 * x**2 + 6.0 * x + 7.0) / two**5
    a01 = (32.0 * _SQRT_2 / 27.0) * (2.0 * x**2 + 5.0 * x - 7.0) / (one * two**3)
    a10 = (8.0 * _SQRT_2 / 27.0) * (4.0 * x**2 + 12.0 * x - 7.0) / (one**2 * two**2)
    return AMatrix2(a00=a00, a01=a01, a10=a10, a11=a11)


def secular_det(x: float) -> float:
    """det(A(x) - I); zero exactly at the bound states kept by the model."""
    a = a_matrix(x)
    return (a.a00 - 1.0) * (a.a11 - 1.0) - a.a01 * a.a10


def find_hydrogen_roots(x_max: float = 3.0, tol: float = 1e-10) -> list[HydrogenRoot]:
    """Locate the bound states of the rank-2 atom on (0, x_max].

    A fixed scan with step 1e-3 brackets every sign change of the
    secular determinant; exactly two are expected.  Each bracket is then
    bisected to floating-point exhaustion, so the returned roots are
    accurate far beyond ``tol`` — the tolerance only caps the accepted
    bracket width and is validated for sanity.

    Args:
        x_max: upper end of the scan window; must cover both roots.
        tol: requested root accuracy, in (0, 1e-6).

    Returns:
        The two roots in ascending order of ``x``.

    Raises:
        ValueError: if ``x_max < 2`` or ``tol`` is out of range.
        BracketingError: if the scan does not find exactly two sign changes.
    """
    if not x_max >= 2.0:
        raise ValueError(f"x_max must be >= 2 to cover both roots, got {x_max}")
    if not 0.0 < tol < 1e-6:
        raise ValueError(f"tol must lie in (0, 1e-6), got {tol}")
    n = int(round(x_max / _SCAN_STEP))
    grid = [_SCAN_STEP * i for i in range(1, n + 1)]
    brackets = scan_sign_changes(secular_det, grid)
    if len(brackets) != 2:
        raise BracketingError(
            f"expected exactly 2 sign changes of the secular determinant on "
            f"(0, {x_max}], found {len(brackets)}"
        )
    roots = []
    for lo, hi in brackets:
        x = refine_bracket(secular_det, lo, hi)
        a = a_matrix(x)
        denom = 1.0 - a.a00
        pure = abs(denom) < 1e-6
        ratio = 0.0 if pure else a.a10 / denom
        roots.append(HydrogenRoot(x=x, lambda_ratio=ratio, pure_state=pure))
    roots.sort(key=lambda root: root.x)
    return roots
