"""Connectivity-level analysis: algebraic connectivity, Fiedler vectors, spectrum tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFiedlerError, NotLaplacianError, OrderMismatchError
from .matrices import SquareMatrix, symmetric_eigendecomposition
from .topology import validate_laplacian

DEFAULT_EIGENVALUE_TOL = 1e-9
DEFAULT_RESIDUAL_TOL = 1e-8
DEGENERACY_GAP = 1e-9


@dataclass(frozen=True)
class ConnectivityReport:
    """Second eigenvalue and its eigenvector, with a degeneracy flag.

    ``fiedler`` is unit-norm under the solver's sign convention; ``degenerate``
    means the gap to the third eigenvalue is below 1e-9, in which case the
    reported vector is still deterministic but not mathematically unique.
    """

    lambda2: float
    fiedler: np.ndarray
    degenerate: bool
    spectrum: np.ndarray

    def __post_init__(self):
        for name in ("fiedler", "spectrum"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def to_json_dict(self) -> dict:
        return {
            "lambda2": self.lambda2,
            "fiedler": [float(x) for x in self.fiedler],
            "degenerate": self.degenerate,
            "spectrum": [float(x) for x in self.spectrum],
        }


def algebraic_connectivity(
    laplacian: SquareMatrix, tol: float = DEFAULT_EIGENVALUE_TOL
) -> ConnectivityReport:
    """Connectivity report for a structurally valid Laplacian."""
    if laplacian.order < 2:
        raise NotLaplacianError("need order >= 2 for a second eigenvalue")
    checks = validate_laplacian(laplacian, tol)
    if not checks.passed:
        raise NotLaplacianError(f"structural validation failed: {checks.to_json_dict()}")
    decomp = symmetric_eigendecomposition(laplacian)
    w = decomp.eigenvalues
    degenerate = laplacian.order >= 3 and bool(w[2] - w[1] < DEGENERACY_GAP)
    return ConnectivityReport(
        lambda2=float(w[1]),
        fiedler=decomp.eigenvectors[:, 1],
        degenerate=degenerate,
        spectrum=w,
    )


def fiedler_is_simple(report: ConnectivityReport) -> bool:
    """True when the second eigenvalue is separated from both neighbors.

    ``report.degenerate`` only covers the gap to the third eigenvalue; a
    disconnected graph has its second eigenvalue glued to the zero eigenvalue
    instead, which makes the Fiedler vector just as ill-defined.
    """
    lower = float(report.spectrum[1] - report.spectrum[0])
    return not report.degenerate and lower >= DEGENERACY_GAP


def is_isospectral(a: SquareMatrix, b: SquareMatrix, tol: float = DEFAULT_EIGENVALUE_TOL) -> bool:
    """True when the full sorted spectra agree element-wise within ``tol``."""
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    wa = symmetric_eigendecomposition(a).eigenvalues
    wb = symmetric_eigendecomposition(b).eigenvalues
    return bool(np.abs(wa - wb).max() <= tol)


@dataclass(frozen=True)
class NullSpaceCheck:
    """Whether one Laplacian's Fiedler vector lies in the null space of the difference.

    Two Laplacians sharing both the connectivity level and the Fiedler vector
    satisfy (L_b - L_a) v = 0; ``residual`` is the infinity norm of that product
    and ``lambda2_match`` cross-checks the connectivity agreement.
    """

    ok: bool
    residual: float
    lambda2_base: float
    lambda2_other: float
    lambda2_match: bool

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "residual": self.residual,
            "lambda2_base": self.lambda2_base,
            "lambda2_other": self.lambda2_other,
            "lambda2_match": self.lambda2_match,
        }


def fiedler_null_space_check(
    base: SquareMatrix, other: SquareMatrix, tol: float = DEFAULT_RESIDUAL_TOL
) -> NullSpaceCheck:
    """Test (other - base) @ fiedler(base) == 0 within ``tol``.

    Both inputs must be valid Laplacians with a simple second eigenvalue;
    degenerate inputs are refused because the Fiedler vector is not unique there.
    """
    if base.order != other.order:
        raise OrderMismatchError(f"orders differ: {base.order} vs {other.order}")
    rep_a = algebraic_connectivity(base)
    rep_b = algebraic_connectivity(other)
    if not (fiedler_is_simple(rep_a) and fiedler_is_simple(rep_b)):
        raise DegenerateFiedlerError("second eigenvalue is repeated; Fiedler vector not unique")
    residual = float(np.abs((other.entries - base.entries) @ rep_a.fiedler).max())
    return NullSpaceCheck(
        ok=residual <= tol,
        residual=residual,
        lambda2_base=rep_a.lambda2,
        lambda2_other=rep_b.lambda2,
        lambda2_match=abs(rep_a.lambda2 - rep_b.lambda2) <= tol,
    )
