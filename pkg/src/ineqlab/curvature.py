"""Pointwise geometric layer: scalar curvature, normal scalar curvature,
mean curvature, the shape-operator form of the pinching inequality, the
fundamental (Gram) matrix with its pinching quantity, and the exact model
configurations (Clifford-type products of spheres, Veronese surface).

Everything is pointwise algebra on a second fundamental form h^a_ij;
no covariant derivatives enter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ddvv import SymmetricTuple
from .errors import InputRejected
from .linalg import sym_eigen
from .report import default_tol


@dataclass(frozen=True)
class SecondFundamentalForm:
    """Array h[alpha, i, j], symmetric in (i, j), with ambient curvature c."""

    n: int
    m: int
    c: float
    h: np.ndarray

    @classmethod
    def from_array(cls, h, c: float) -> "SecondFundamentalForm":
        arr = np.asarray(h, dtype=float)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise InputRejected(f"h must have shape (m, n, n), got {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InputRejected("h must be nonempty")
        if not np.all(np.isfinite(arr)):
            raise InputRejected("h entries must be finite")
        if not np.isfinite(c):
            raise InputRejected("ambient curvature c must be finite")
        defect = float(np.max(np.abs(arr - arr.transpose(0, 2, 1))))
        if defect > 1e-12 * (1.0 + float(np.max(np.abs(arr)))):
            raise InputRejected(f"h not symmetric in (i, j): defect {defect:.3e}")
        return cls(n=arr.shape[1], m=arr.shape[0], c=float(c), h=arr)

    def to_tuple(self) -> SymmetricTuple:
        """The shape operators as a plain symmetric tuple."""
        return SymmetricTuple.from_matrices(list(self.h))


@dataclass(frozen=True)
class CurvatureReport:
    rho: float
    rho_perp: float
    mean_curv_sq: float
    geometric_slack: float
    shape_slack: float


@dataclass(frozen=True)
class FundamentalReport:
    s: np.ndarray
    eigenvalues: np.ndarray
    sigma_sq: float
    pinch: float


def mean_curvature_sq(form: SecondFundamentalForm) -> float:
    """|H|^2 = sum_a (trace(h^a) / n)^2."""
    traces = form.h.trace(axis1=1, axis2=2) / form.n
    return float(np.sum(traces * traces))


def traceless(form: SecondFundamentalForm) -> SecondFundamentalForm:
    """Remove the trace part of every slice."""
    traces = form.h.trace(axis1=1, axis2=2) / form.n
    out = form.h - traces[:, None, None] * np.eye(form.n)[None, :, :]
    return SecondFundamentalForm(n=form.n, m=form.m, c=form.c, h=out)


def _normal_curvature_sum(h: np.ndarray) -> float:
    """sum_{i<j} sum_{r<s} (sum_k h^r_ik h^s_jk - h^s_ik h^r_jk)^2.

    For symmetric slices the inner sum is the (i, j) entry of [A_r, A_s],
    so this equals half of sum_{r<s} ||[A_r, A_s]||^2.
    """
    m, n, _ = h.shape
    iu, ju = np.triu_indices(n, k=1)
    total = 0.0
    for r in range(m):
        for s in range(r + 1, m):
            comm = h[r] @ h[s] - h[s] @ h[r]
            total += float(np.sum(comm[iu, ju] ** 2))
    return total


def curvature_report(form: SecondFundamentalForm) -> CurvatureReport:
    """Scalar and normal scalar curvature plus the two pinching slacks.

    rho is normalized so that h = 0 recovers the ambient value c.  The
    geometric slack is |H|^2 + c - rho - rho_perp; the shape slack is the
    equivalent inequality on the traceless part,
    sum_r sum_{i<j} (h^r_ii - h^r_jj)^2 + 2n sum_r sum_{i<j} (h^r_ij)^2
      - 2n sqrt(normal curvature sum),
    which equals n^2 (n-1) times the geometric slack.
    """
    if form.n < 2:
        raise InputRejected("rho is undefined for n < 2")
    n, m, h = form.n, form.m, form.h
    coeff = 2.0 / (n * (n - 1.0))
    iu, ju = np.triu_indices(n, k=1)

    gauss = 0.0
    for al in range(m):
        diag = np.diag(h[al])
        gauss += 0.5 * (float(np.sum(diag)) ** 2 - float(np.sum(diag * diag)))
        gauss -= float(np.sum(h[al][iu, ju] ** 2))
    rho = form.c + coeff * gauss

    perp_sum = _normal_curvature_sum(h)
    rho_perp = coeff * float(np.sqrt(perp_sum))

    h2 = mean_curvature_sq(form)
    geometric_slack = h2 + form.c - rho - rho_perp

    t = traceless(form).h
    diag_part = sum(
        float(np.sum((np.diag(t[al])[iu] - np.diag(t[al])[ju]) ** 2)) for al in range(m)
    )
    off_part = sum(float(np.sum(t[al][iu, ju] ** 2)) for al in range(m))
    shape_slack = diag_part + 2.0 * n * off_part - 2.0 * n * float(
        np.sqrt(_normal_curvature_sum(t))
    )
    return CurvatureReport(
        rho=rho,
        rho_perp=rho_perp,
        mean_curv_sq=h2,
        geometric_slack=geometric_slack,
        shape_slack=shape_slack,
    )


def fundamental_report(form: SecondFundamentalForm) -> FundamentalReport:
    """Gram matrix of the shape operators, its spectrum, and the pinching
    quantity ||sigma||^2 + lambda_2 (lambda_2 := 0 when m = 1)."""
    stack = form.h
    s = np.einsum("aij,bij->ab", stack, stack)
    eig = sym_eigen(s)
    sigma_sq = float(np.trace(s))
    lam2 = float(eig.values[1]) if form.m >= 2 else 0.0
    return FundamentalReport(
        s=s,
        eigenvalues=eig.values,
        sigma_sq=sigma_sq,
        pinch=sigma_sq + lam2,
    )


def clifford_model(r: int, n: int) -> SecondFundamentalForm:
    """Second fundamental form of the minimal product of spheres in the
    unit sphere: one normal direction, diagonal with r entries
    sqrt((n-r)/r) and n-r entries -sqrt(r/(n-r)); ||sigma||^2 = n."""
    if not 1 <= r <= n - 1:
        raise InputRejected(f"need 1 <= r <= n-1, got r={r}, n={n}")
    lam1 = np.sqrt((n - r) / float(r))
    lam2 = -np.sqrt(r / float(n - r))
    diag = np.concatenate([np.full(r, lam1), np.full(n - r, lam2)])
    return SecondFundamentalForm.from_array(np.diag(diag)[None, :, :], c=1.0)


def veronese_tuple() -> SecondFundamentalForm:
    """Pointwise shape operators of the Veronese surface in the 4-sphere:
    the extremal 2x2 pair scaled to ||sigma||^2 = 4/3; sits exactly on the
    pinching boundary with DDVV equality."""
    f = np.sqrt(2.0 / 3.0)
    s = 1.0 / np.sqrt(2.0)
    h = np.zeros((2, 2, 2))
    h[0, 0, 0] = f * s
    h[0, 1, 1] = -f * s
    h[1, 0, 1] = h[1, 1, 0] = f * s
    return SecondFundamentalForm.from_array(h, c=1.0)


def veronese_immersion(p) -> np.ndarray:
    """Quadratic isometric immersion of the radius-sqrt(3) 2-sphere into S^4.

    Maps (x, y, z) with x^2 + y^2 + z^2 = 3 to the unit vector
    (yz/sqrt3, zx/sqrt3, xy/sqrt3, (x^2 - y^2)/(2 sqrt3), (x^2 + y^2 - 2z^2)/6).
    Antipodal points map to the same image.
    """
    pv = np.asarray(p, dtype=float)
    if pv.shape != (3,):
        raise InputRejected("p must be a 3-vector")
    if not np.all(np.isfinite(pv)):
        raise InputRejected("p entries must be finite")
    radius_sq = float(np.sum(pv * pv))
    if abs(radius_sq - 3.0) > 1e-10:
        raise InputRejected(f"|p|^2 = {radius_sq:.12f}, point must lie on the sphere of radius sqrt(3)")
    x, y, z = pv
    s3 = np.sqrt(3.0)
    return np.array(
        [
            y * z / s3,
            z * x / s3,
            x * y / s3,
            (x * x - y * y) / (2.0 * s3),
            (x * x + y * y - 2.0 * z * z) / 6.0,
        ]
    )


def geometric_tol(report: CurvatureReport, c: float) -> float:
    """Tolerance for the geometric slack, scaled like the inequality sides."""
    return default_tol(abs(report.mean_curv_sq) + abs(c))
