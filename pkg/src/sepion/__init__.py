"""Separable-potential bound states of a three-proton, one-electron ion.

Rydberg units throughout (hbar = 2m = e^2/2 = 1), lengths in Bohr radii.
The electronic binding parameter x fixes the energy through
E_electronic = -x^2 Ry; geometry is one proton at the origin plus two at
distance r, at polar angles +-alpha off the symmetry axis.
"""

from .hydrogen import (
    AMatrix2,
    BracketingError,
    HydrogenRoot,
    a_matrix,
    find_hydrogen_roots,
    secular_det,
)
from .molecule import (
    ConsistencyError,
    Factor,
    Geometry,
    IntegralSet,
    LambdaVector,
    NoBoundStateError,
    SecularRoot,
    excited_root,
    f_overlap,
    ground_state_root,
    i0,
    integral_set,
    lambda_vector,
    secular_factors,
)
from .oracle import (
    QuadratureResult,
    oracle_a_entry,
    oracle_i_integral,
    oracle_lambda_projection,
)
from .pes import (
    PesRow,
    PesTable,
    StabilityReport,
    comparison_curve,
    nuclear_repulsion,
    scan_r,
    stability_report,
)
from .reference import REFERENCE_ALPHAS, load_reference_roots, reference_keys
from .wavefunction import (
    AngularGrid,
    PsiParams,
    QuadratureConvergenceError,
    normalize,
    psi,
    psi_grid,
    raw_params,
    rho_pm,
)

__version__ = "0.1.0"

__all__ = [
    "AMatrix2",
    "AngularGrid",
    "BracketingError",
    "ConsistencyError",
    "Factor",
    "Geometry",
    "HydrogenRoot",
    "IntegralSet",
    "LambdaVector",
    "NoBoundStateError",
    "PesRow",
    "PesTable",
    "PsiParams",
    "QuadratureConvergenceError",
    "QuadratureResult",
    "REFERENCE_ALPHAS",
    "SecularRoot",
    "StabilityReport",
    "a_matrix",
    "comparison_curve",
    "excited_root",
    "f_overlap",
    "find_hydrogen_roots",
    "ground_state_root",
    "i0",
    "integral_set",
    "lambda_vector",
    "load_reference_roots",
    "normalize",
    "nuclear_repulsion",
    "oracle_a_entry",
    "oracle_i_integral",
    "oracle_lambda_projection",
    "psi",
    "psi_grid",
    "raw_params",
    "reference_keys",
    "rho_pm",
    "scan_r",
    "secular_det",
    "secular_factors",
    "stability_report",
]
