"""The Bottcher-Wenzel commutator bound ||[X, Y]||^2 <= 2 ||X||^2 ||Y||^2
for arbitrary square matrices, explored through the symmetric positive
semidefinite operator T: Y -> [X^T, [X, Y]].

The top eigenvalue of T (for unit X) is the sharp constant seen by X, it
always has multiplicity at least two (the partner eigenvector is
[X^T, Y^T]), and the singular-value reduction replaces [X, Y] by
Lambda B - C Lambda with B, C conjugates of Y.  An alternating
eigenvector ascent searches for the extremal ratio.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputRejected, NumericalFailure
from .linalg import (
    as_matrix,
    commutator,
    frobenius_inner,
    frobenius_norm,
    norm_sq,
    svd,
    sym_eigen,
)
from .report import SlackReport, default_tol
from .seeded import RandomStream


@dataclass(frozen=True)
class TOperator:
    """Matrix of Y -> [X^T, [X, Y]] under row-major flattening of Y.

    `x` is stored unit-norm; `matrix` is the symmetric n^2 x n^2
    representation whose top eigenvalue is at most 2.
    """

    n: int
    x: np.ndarray
    matrix: np.ndarray

    def apply(self, y: np.ndarray) -> np.ndarray:
        """Direct evaluation of [X^T, [X, Y]] (independent of `matrix`)."""
        inner = self.x @ y - y @ self.x
        return self.x.T @ inner - inner @ self.x.T


def t_operator(x) -> TOperator:
    """Build the T operator of a nonzero matrix, rescaled to ||x|| = 1.

    Columns are the images of the standard basis matrices E_ij in
    row-major order, so matrix[:, i*n + j] = vec([X^T, [X, E_ij]]).
    """
    xm = as_matrix(x, "x")
    nrm = frobenius_norm(xm)
    if nrm == 0.0:
        raise InputRejected("x must be nonzero")
    xu = xm / nrm
    n = xu.shape[0]
    basis = np.eye(n * n).reshape(n * n, n, n)
    inner = xu @ basis - basis @ xu
    images = xu.T @ inner - inner @ xu.T
    return TOperator(n=n, x=xu, matrix=images.reshape(n * n, n * n).T)


def t_spectrum(x) -> np.ndarray:
    """Eigenvalues of the T operator, descending."""
    top = t_operator(x)
    return np.sort(np.linalg.eigvalsh(top.matrix))[::-1]


def bw_spectral_slack(x) -> SlackReport:
    """Spectral form of the bound: lambda_max(T) <= 2 for unit X."""
    lhs = float(t_spectrum(x)[0])
    rhs = 2.0
    return SlackReport("bw-spectral", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=default_tol(lhs))


def bw_slack(x, y) -> SlackReport:
    """Direct form: ||[X, Y]||^2 <= 2 ||X||^2 ||Y||^2.

    The weaker constant-3 bound is asserted alongside as a sanity layer.
    """
    xm = as_matrix(x, "x")
    ym = as_matrix(y, "y")
    if xm.shape != ym.shape:
        raise InputRejected(f"dimension mismatch: {xm.shape} vs {ym.shape}")
    lhs = norm_sq(commutator(xm, ym))
    scale = norm_sq(xm) * norm_sq(ym)
    rhs = 2.0 * scale
    tol = default_tol(lhs)
    if lhs > 3.0 * scale + tol:
        raise AssertionError(f"constant-3 sanity bound violated: {lhs} > 3 * {scale}")
    return SlackReport("bottcher-wenzel", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=tol)


def partner_eigenvector(x, y) -> np.ndarray:
    """Partner eigenvector [X^T, Y^T] of an eigenvector Y of T.

    Checks that y really is an eigenvector (residual <= 1e-8 after unit
    normalization), then verifies the partner is Frobenius-orthogonal to y
    and satisfies the same eigenvalue equation to 1e-7.  The partner may
    legitimately be zero when the eigenvalue is zero.
    """
    top = t_operator(x)
    ym = as_matrix(y, "y")
    ynorm = frobenius_norm(ym)
    if ynorm == 0.0:
        raise InputRejected("y must be nonzero")
    yu = ym / ynorm
    ty = top.apply(yu)
    alpha = frobenius_inner(yu, ty)
    residual = frobenius_norm(ty - alpha * yu)
    if residual > 1e-8 * (1.0 + abs(alpha)):
        raise InputRejected(
            f"y is not an eigenvector of T: residual {residual:.3e} at Rayleigh value {alpha:.6e}"
        )
    partner = commutator(top.x.T, yu.T)
    pnorm = frobenius_norm(partner)
    if alpha > 1e-10 and pnorm == 0.0:
        raise NumericalFailure("partner vanished for a positive eigenvalue")
    if abs(frobenius_inner(yu, partner)) > 1e-8 * (1.0 + pnorm):
        raise NumericalFailure("partner is not orthogonal to y")
    if frobenius_norm(top.apply(partner) - alpha * partner) > 1e-7 * (1.0 + abs(alpha)) * (
        1.0 + pnorm
    ):
        raise NumericalFailure("partner does not satisfy the eigenvalue equation")
    return partner * ynorm


def svd_reduction(x, y):
    """Reduce [X, Y] through the singular decomposition X = Q1 Lambda Q2.

    Returns (lam, b, c) with b = Q2 Y Q2^-1 and c = Q1^-1 Y Q1, so that
    ||[X, Y]|| = ||diag(lam) b - c diag(lam)||.
    """
    xm = as_matrix(x, "x")
    ym = as_matrix(y, "y")
    if xm.shape != ym.shape:
        raise InputRejected(f"dimension mismatch: {xm.shape} vs {ym.shape}")
    dec = svd(xm)
    b = dec.q2 @ ym @ dec.q2.T
    c = dec.q1.T @ ym @ dec.q1
    return dec.lam, b, c


def small_s1_check(x, y) -> SlackReport:
    """Reduced bound for generators with s_1^2 <= 1/2.

    After unit-normalizing x, the reduction gives
    ||Lambda B - C Lambda||^2 <= 2 ||Y||^2 whenever the top singular value
    satisfies s_1^2 <= 1/2.
    """
    xm = as_matrix(x, "x")
    nrm = frobenius_norm(xm)
    if nrm == 0.0:
        raise InputRejected("x must be nonzero")
    xu = xm / nrm
    lam, b, c = svd_reduction(xu, y)
    if lam[0] ** 2 > 0.5 + 1e-12:
        raise InputRejected(
            f"s_1^2 = {lam[0] ** 2:.6f} > 1/2; this reduction does not apply, "
            "use bw_slack for the general bound"
        )
    lhs = norm_sq(np.diag(lam) @ b - c @ np.diag(lam))
    rhs = 2.0 * norm_sq(as_matrix(y, "y"))
    return SlackReport("small-s1", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=default_tol(lhs))


def bw_case_matrix_bound(b, c) -> SlackReport:
    """Arrowhead bound for the large-s_1 case of the spectral proof.

    For conjugate pair (b, c) with b_11 = 0, the matrix P with corner
    Delta = sum_i b_1i^2 + sum_j c_j1^2 + c_11^2, diagonal b_i1^2 + c_1i^2
    and border -(b_1i c_1i + b_i1 c_i1) has top eigenvalue at most
    Delta + sum_i b_i1^2 + sum_j c_1j^2.
    """
    bm = as_matrix(b, "b")
    cm = as_matrix(c, "c")
    if bm.shape != cm.shape:
        raise InputRejected(f"dimension mismatch: {bm.shape} vs {cm.shape}")
    n = bm.shape[0]
    if n < 2:
        raise InputRejected("n must be >= 2")
    if abs(bm[0, 0]) > 1e-12:
        raise InputRejected(f"b_11 = {bm[0, 0]:.3e} must vanish (within 1e-12)")
    p = np.zeros((n, n))
    p[0, 0] = float(np.sum(bm[0, 1:] ** 2) + np.sum(cm[1:, 0] ** 2) + cm[0, 0] ** 2)
    for i in range(1, n):
        p[i, i] = bm[i, 0] ** 2 + cm[0, i] ** 2
        p[0, i] = p[i, 0] = -(bm[0, i] * cm[0, i] + bm[i, 0] * cm[i, 0])
    lhs = float(sym_eigen(p).values[0])
    rhs = p[0, 0] + float(np.sum(bm[1:, 0] ** 2) + np.sum(cm[0, 1:] ** 2))
    return SlackReport("case-matrix", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=default_tol(lhs))


@dataclass(frozen=True)
class RatioSearchResult:
    best_ratio: float
    x: np.ndarray
    y: np.ndarray
    iterations: int
    converged: bool
    trajectory: tuple


def _top_eigenmatrix(op: TOperator) -> tuple:
    eig = sym_eigen(op.matrix)
    vec = eig.vectors[:, 0].reshape(op.n, op.n)
    return float(eig.values[0]), vec / frobenius_norm(vec)


def maximize_ratio(n: int, seed: int, max_iters: int, x0=None) -> RatioSearchResult:
    """Alternating exact maximization of ||[x, y]||^2 over unit spheres.

    Each half-step replaces one argument by the top eigenvector of the
    T operator built from the other (valid since ||[x, y]|| = ||[y, x]||),
    so the ratio trajectory never decreases.  A start whose operator is
    zero (x proportional to the identity) is a degenerate fixed point and
    gets reseeded, at most 10 times.  Stops when the improvement drops
    below 1e-12 or at max_iters.  `x0` optionally injects the start.
    """
    if n < 2:
        raise InputRejected("n must be >= 2")
    if max_iters < 0:
        raise InputRejected("max_iters must be >= 0")
    stream = RandomStream(seed)
    if x0 is not None:
        x = as_matrix(x0, "x0")
        if x.shape[0] != n:
            raise InputRejected(f"x0 must be {n}x{n}")
        nrm = frobenius_norm(x)
        if nrm == 0.0:
            raise InputRejected("x0 must be nonzero")
        x = x / nrm
    else:
        x = stream.gaussian_matrix(n)
        x /= frobenius_norm(x)
    for _ in range(10):
        if t_spectrum(x)[0] >= 1e-12:
            break
        x = stream.gaussian_matrix(n)
        x /= frobenius_norm(x)

    y = stream.gaussian_matrix(n)
    y /= frobenius_norm(y)
    trajectory = [norm_sq(commutator(x, y))]
    converged = False
    iterations = 0
    for _ in range(max_iters):
        iterations += 1
        _, y = _top_eigenmatrix(t_operator(x))
        ratio, x = _top_eigenmatrix(t_operator(y))
        trajectory.append(ratio)
        if trajectory[-1] - trajectory[-2] < 1e-12:
            converged = True
            break
    return RatioSearchResult(
        best_ratio=trajectory[-1],
        x=x,
        y=y,
        iterations=iterations,
        converged=converged,
        trajectory=tuple(trajectory),
    )
