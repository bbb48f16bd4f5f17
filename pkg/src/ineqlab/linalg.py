"""Dense small-matrix primitives: Frobenius geometry, commutators,
symmetric eigendecomposition, SVD, and the symmetric vectorization map.

Everything operates on plain float64 numpy arrays.  Inputs are validated
(finite entries, square shape, symmetry where required) and rejected with
:class:`InputRejected`; backend convergence failures surface as
:class:`NumericalFailure`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputRejected, NumericalFailure

# Relative tolerance for "is symmetric" input validation.
SYMMETRY_TOL = 1e-12


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and return `a` as a square float64 array with finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputRejected(f"{name}: expected a square 2-D array, got shape {m.shape}")
    if m.shape[0] < 1:
        raise InputRejected(f"{name}: empty matrix")
    if not np.all(np.isfinite(m)):
        raise InputRejected(f"{name}: entries must be finite (no NaN/Inf)")
    return m


def norm_sq(a: np.ndarray) -> float:
    """Squared Frobenius norm."""
    return float(np.sum(a * a))


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.sqrt(norm_sq(a)))


def frobenius_inner(a, b) -> float:
    """Frobenius (Hilbert-Schmidt) inner product sum_ij a_ij b_ij."""
    am = as_matrix(a, "a")
    bm = as_matrix(b, "b")
    if am.shape != bm.shape:
        raise InputRejected(f"dimension mismatch: {am.shape} vs {bm.shape}")
    return float(np.sum(am * bm))


def commutator(a, b) -> np.ndarray:
    """Commutator AB - BA."""
    am = as_matrix(a, "a")
    bm = as_matrix(b, "b")
    if am.shape != bm.shape:
        raise InputRejected(f"dimension mismatch: {am.shape} vs {bm.shape}")
    return am @ bm - bm @ am


def symmetry_defect(a: np.ndarray) -> float:
    """max |a_ij - a_ji|, the absolute deviation from symmetry."""
    return float(np.max(np.abs(a - a.T))) if a.size else 0.0


def require_symmetric(a: np.ndarray, name: str = "matrix") -> np.ndarray:
    defect = symmetry_defect(a)
    allowed = SYMMETRY_TOL * (1.0 + frobenius_norm(a))
    if defect > allowed:
        raise InputRejected(
            f"{name}: not symmetric (max |a_ij - a_ji| = {defect:.3e}, allowed {allowed:.3e})"
        )
    return a


def is_orthogonal(p: np.ndarray, tol: float = 1e-10) -> bool:
    """Entrywise check of p^T p = I within `tol`."""
    n = p.shape[0]
    return bool(np.max(np.abs(p.T @ p - np.eye(n))) <= tol)


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition of a symmetric matrix.

    `values` are sorted descending; column k of `vectors` is the unit
    eigenvector paired with values[k].
    """

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.vectors @ np.diag(self.values) @ self.vectors.T


@dataclass(frozen=True)
class SingularDecomposition:
    """Factorization x = q1 @ diag(lam) @ q2 with orthogonal q1, q2.

    `lam` holds the singular values, nonnegative and sorted descending;
    note q2 is the full right factor (not its transpose).
    """

    q1: np.ndarray
    lam: np.ndarray
    q2: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.q1 @ np.diag(self.lam) @ self.q2


def sym_eigen(a) -> EigenDecomposition:
    """Eigendecomposition of a symmetric matrix, eigenvalues descending.

    Rejects inputs whose symmetry defect exceeds 1e-12 * (1 + ||a||).
    """
    m = as_matrix(a, "a")
    require_symmetric(m, "a")
    sym = 0.5 * (m + m.T)
    try:
        w, v = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver did not converge: {exc}") from exc
    order = np.argsort(w)[::-1]
    return EigenDecomposition(values=w[order], vectors=v[:, order])


def svd(x) -> SingularDecomposition:
    """Singular decomposition x = q1 diag(lam) q2, singular values descending."""
    m = as_matrix(x, "x")
    try:
        u, s, vh = np.linalg.svd(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"svd did not converge: {exc}") from exc
    return SingularDecomposition(q1=u, lam=s, q2=vh)


def vectorize_sym(a) -> np.ndarray:
    """Map a symmetric n x n matrix to a vector of length n(n+1)/2.

    Off-diagonal entries a_ij (i < j, row-major order) are listed once,
    followed by the diagonal scaled by 1/sqrt(2), so the squared Euclidean
    norm of the output equals half the squared Frobenius norm of `a`.
    """
    m = as_matrix(a, "a")
    require_symmetric(m, "a")
    n = m.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    return np.concatenate([m[iu, ju], np.diag(m) / np.sqrt(2.0)])
