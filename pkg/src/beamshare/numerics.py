"""Dense complex linear algebra kernels shared by the whole package.

Everything here operates on plain complex numpy arrays.  Hermitian inputs
are re-symmetrized before factorization so that accumulated floating-point
asymmetry (at most ~1e-12 elementwise for anything produced by this
package) never reaches LAPACK.  All functions are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Relative eigenvalue threshold for rank decisions: far above interior-point
# solver noise (~1e-8 of lambda_max) and far below genuine spectral gaps.
DEFAULT_RANK_TOL = 1e-6

HERMITIAN_ATOL = 1e-12


class NumericalFailure(RuntimeError):
    """A dense factorization or eigeniteration failed to converge.

    Carries basic condition diagnostics of the offending matrix so a failed
    Monte Carlo trial can be reported without re-running it.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class NotPositiveDefinite(ValueError):
    """Matrix required to be Hermitian positive definite is not."""


def hermitian_part(a: np.ndarray) -> np.ndarray:
    """Project onto the Hermitian part, (A + A^H)/2."""
    a = np.asarray(a)
    return 0.5 * (a + a.conj().T)


def check_hermitian(a: np.ndarray, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Validate A = A^H elementwise within `atol` and return the symmetrized copy."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 0.0)
    if not np.allclose(a, a.conj().T, rtol=0.0, atol=atol * scale):
        raise ValueError("matrix is not Hermitian within tolerance")
    return hermitian_part(a)


@dataclass(frozen=True)
class EigDecomposition:
    """Hermitian eigendecomposition with eigenvalues sorted non-increasing.

    ``eigenvectors[:, i]`` is the unit-norm eigenvector paired with
    ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Return U diag(w) U^H."""
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


def _condition_diagnostics(a: np.ndarray) -> dict:
    a = np.asarray(a)
    finite = bool(np.all(np.isfinite(a)))
    diag = {
        "shape": a.shape,
        "finite": finite,
        "fro_norm": float(np.linalg.norm(a)) if finite else float("nan"),
    }
    if finite and a.size:
        try:
            s = np.linalg.svd(a, compute_uv=False)
            diag["cond"] = float(s[0] / s[-1]) if s[-1] > 0 else float("inf")
        except np.linalg.LinAlgError:
            diag["cond"] = float("nan")
    return diag


def hermitian_eig(a: np.ndarray) -> EigDecomposition:
    """Eigendecompose a Hermitian matrix, eigenvalues non-increasing."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix of dim >= 1, got shape {a.shape}")
    try:
        w, v = np.linalg.eigh(hermitian_part(a))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(
            f"hermitian eigendecomposition did not converge: {exc}",
            diagnostics=_condition_diagnostics(a),
        ) from exc
    return EigDecomposition(w[::-1].copy(), v[:, ::-1].copy())


def psd_inverse_sqrt(a: np.ndarray) -> np.ndarray:
    """Inverse square root B of a Hermitian positive definite A, with B B = A^{-1}."""
    dec = hermitian_eig(a)
    smallest = float(dec.eigenvalues[-1])
    if smallest <= 0.0:
        raise NotPositiveDefinite(
            f"matrix is not positive definite (smallest eigenvalue {smallest:.3e})"
        )
    u = dec.eigenvectors
    b = (u / np.sqrt(dec.eigenvalues)) @ u.conj().T
    return hermitian_part(b)


def logdet_hpd(a: np.ndarray) -> float:
    """log2 det(A) for Hermitian positive definite A, via Cholesky."""
    a = np.asarray(a, dtype=complex)
    try:
        chol = np.linalg.cholesky(hermitian_part(a))
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("matrix is not positive definite") from exc
    return float(2.0 * np.sum(np.log2(np.real(np.diag(chol)))))


def trace_product(a: np.ndarray, b: np.ndarray) -> float:
    """Re tr(A B) for Hermitian A, B of equal dimension.

    Symmetric in its arguments bit-for-bit: Re tr(AB) is evaluated as the
    elementwise sum of Re(conj(B) * A), which is the same expression with
    the roles of A and B swapped.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.real(np.vdot(b, a)))


def numerical_rank(a: np.ndarray, rel_tol: float = DEFAULT_RANK_TOL) -> int:
    """Count of eigenvalues above rel_tol * lambda_max for Hermitian PSD A.

    Returns 0 for the zero matrix (or anything with lambda_max <= 0).
    """
    a = np.asarray(a, dtype=complex)
    w = np.linalg.eigvalsh(hermitian_part(a))
    lam_max = float(w[-1])
    if lam_max <= 0.0:
        return 0
    return int(np.count_nonzero(w > rel_tol * lam_max))
