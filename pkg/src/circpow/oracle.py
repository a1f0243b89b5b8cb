"""Independent numeric ground truth: a dense symmetric eigensolver.

Everything the closed forms and the multiplicity formulas claim is checked
at desk scale against this module.  The decomposition is backed by LAPACK
(numpy.linalg.eigh); the contract enforced on every result is what the
rest of the package relies on:

* values ascending,
* max-norm residual ||A V - V diag(values)|| <= RESIDUAL_FACTOR * n,
* orthonormality ||V^T V - I|| <= ORTHONORMALITY_TOL.

Tolerances live here as named constants; they are test-surface parameters,
not mathematical content.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousToleranceWarning, DomainError, NonConvergenceError
from .graphs import PathPower, adjacency

MAX_ORDER = 2000
COMPARISON_TOL = 1e-7  # closed form vs numeric, per eigenvalue
ORTHONORMALITY_TOL = 1e-8
RESIDUAL_FACTOR = 1e-8  # residual allowance per unit of matrix order


@dataclass(frozen=True)
class EigenDecomposition:
    """Full spectral decomposition of a symmetric matrix.

    ``values`` ascending; column k of ``vectors`` belongs to ``values[k]``.
    """

    values: np.ndarray
    vectors: np.ndarray
    residual: float

    @property
    def n(self) -> int:
        return len(self.values)


def _check_input(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_ORDER:
        raise DomainError(f"order {a.shape[0]} exceeds the supported {MAX_ORDER}")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not symmetric")
    return a.astype(float)


def symmetric_eigen(a: np.ndarray) -> EigenDecomposition:
    """Full decomposition of a symmetric matrix, residual included."""
    af = _check_input(a)
    n = af.shape[0]
    try:
        values, vectors = np.linalg.eigh(af)
    except np.linalg.LinAlgError as exc:
        raise NonConvergenceError(f"eigensolver did not converge: {exc}") from exc
    residual = float(np.max(np.abs(af @ vectors - vectors * values))) if n else 0.0
    dec = EigenDecomposition(values=values, vectors=vectors, residual=residual)
    if residual > RESIDUAL_FACTOR * max(n, 1):
        raise NonConvergenceError(
            f"residual {residual:g} exceeds {RESIDUAL_FACTOR:g} * n"
        )
    ortho = float(np.max(np.abs(vectors.T @ vectors - np.eye(n)))) if n else 0.0
    if ortho > ORTHONORMALITY_TOL:
        raise NonConvergenceError(f"orthonormality defect {ortho:g}")
    return dec


def symmetric_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Values-only fast path (same solver, no eigenvectors or residual)."""
    af = _check_input(a)
    try:
        return np.linalg.eigvalsh(af)
    except np.linalg.LinAlgError as exc:
        raise NonConvergenceError(f"eigensolver did not converge: {exc}") from exc


def numeric_multiplicity(
    dec: EigenDecomposition | np.ndarray, lam: float, tol: float = COMPARISON_TOL
) -> int:
    """Count eigenvalues within tol of lam.

    Warns when some eigenvalue falls in the ambiguous band (tol, 10*tol)
    around lam: the count is then sensitive to the tolerance choice.
    """
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    values = dec.values if isinstance(dec, EigenDecomposition) else np.asarray(dec)
    gaps = np.abs(values - lam)
    count = int(np.count_nonzero(gaps <= tol))
    ambiguous = np.count_nonzero((gaps > tol) & (gaps < 10.0 * tol))
    if ambiguous:
        warnings.warn(
            f"{ambiguous} eigenvalue(s) within (tol, 10*tol) of {lam}",
            AmbiguousToleranceWarning,
            stacklevel=2,
        )
    return count


def path_power_spectrum(g: PathPower) -> EigenDecomposition:
    """Numeric spectrum of a path distance power (no closed form exists)."""
    return symmetric_eigen(adjacency(g))


def eigenspace_projector(dec: EigenDecomposition, lam: float, tol: float = COMPARISON_TOL) -> np.ndarray:
    """Orthogonal projector onto the numeric eigenspace for lam."""
    cols = np.abs(dec.values - lam) <= tol
    v = dec.vectors[:, cols]
    return v @ v.T
