"""The DDVV inequality for tuples of symmetric matrices and its support
structure: the orthogonal-group action and canonical reduction, the two
key lemmas behind the proof (weighted eigenvalue-gap bound, refined
commutator-sum bound) with their arrowhead-matrix argument, the explicit
equality configurations, and the Li-Li quadratic-form inequality.
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
    is_orthogonal,
    norm_sq,
    require_symmetric,
    sym_eigen,
)
from .report import SlackReport, default_tol

ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class SymmetricTuple:
    """Ordered tuple (A_1, ..., A_m) of symmetric n x n matrices."""

    n: int
    m: int
    matrices: tuple

    @classmethod
    def from_matrices(cls, mats) -> "SymmetricTuple":
        if len(mats) < 1:
            raise InputRejected("tuple must contain at least one matrix")
        validated = []
        n = None
        for k, a in enumerate(mats):
            mat = as_matrix(a, f"member {k + 1}")
            require_symmetric(mat, f"member {k + 1}")
            if n is None:
                n = mat.shape[0]
            elif mat.shape[0] != n:
                raise InputRejected(
                    f"member {k + 1} is {mat.shape[0]}x{mat.shape[0]}, expected {n}x{n}"
                )
            validated.append(mat)
        return cls(n=n, m=len(validated), matrices=tuple(validated))

    def norms_sq(self) -> np.ndarray:
        return np.array([norm_sq(a) for a in self.matrices])

    def gram(self) -> np.ndarray:
        """Gram matrix of Frobenius inner products <A_a, A_b>."""
        stack = np.stack(self.matrices)
        return np.einsum("aij,bij->ab", stack, stack)


@dataclass(frozen=True)
class CanonicalForm:
    """Reduced tuple plus the group element (p, q) that produced it."""

    reduced: SymmetricTuple
    p: np.ndarray
    q: np.ndarray
    degenerate: bool = False


def ddvv_slack(t: SymmetricTuple) -> SlackReport:
    """DDVV inequality: (sum ||A_r||^2)^2 >= 2 sum_{r<s} ||[A_r, A_s]||^2."""
    lhs = float(np.sum(t.norms_sq())) ** 2
    rhs = 0.0
    for r in range(t.m):
        for s in range(r + 1, t.m):
            rhs += norm_sq(commutator(t.matrices[r], t.matrices[s]))
    rhs *= 2.0
    tol = default_tol(lhs)
    return SlackReport("ddvv", lhs=lhs, rhs=rhs, slack=lhs - rhs, tol=tol)


def group_act(t: SymmetricTuple, p, q) -> SymmetricTuple:
    """Apply (p, q) in O(n) x O(m): conjugate each member by p, mix members by q."""
    pm = as_matrix(p, "p")
    qm = as_matrix(q, "q")
    if pm.shape[0] != t.n:
        raise InputRejected(f"p must be {t.n}x{t.n}")
    if qm.shape[0] != t.m:
        raise InputRejected(f"q must be {t.m}x{t.m}")
    if not is_orthogonal(pm, ORTHO_TOL):
        raise InputRejected("p is not orthogonal within 1e-10")
    if not is_orthogonal(qm, ORTHO_TOL):
        raise InputRejected("q is not orthogonal within 1e-10")
    conjugated = np.stack([pm @ a @ pm.T for a in t.matrices])
    mixed = np.einsum("rj,jab->rab", qm, conjugated)
    return SymmetricTuple.from_matrices(list(mixed))


def canonical_reduce(t: SymmetricTuple) -> CanonicalForm:
    """Reduce a tuple to canonical position under the O(n) x O(m) action.

    First an O(m) rotation diagonalizes the Gram matrix (eigenvalues
    descending, so the members come out pairwise Frobenius-orthogonal with
    nonincreasing norms), then an O(n) conjugation diagonalizes the new
    leading member.  Conjugation preserves all pairwise inner products, so
    both normalizations coexist.  The all-zero tuple is returned unchanged
    with the degenerate flag set.
    """
    gram_eig = sym_eigen(t.gram())
    q = gram_eig.vectors.T
    mixed = np.einsum("rj,jab->rab", q, np.stack(t.matrices))

    degenerate = frobenius_norm(mixed[0]) <= 1e-14 * (1.0 + frobenius_norm(np.stack(t.matrices)))
    if degenerate:
        p = np.eye(t.n)
        reduced_stack = mixed
    else:
        lead_eig = sym_eigen(mixed[0])
        p = lead_eig.vectors.T
        reduced_stack = np.stack([p @ a @ p.T for a in mixed])
        # cosmetic determinism: make the first nonzero diagonal entry of A_1 positive
        diag = np.diag(reduced_stack[0])
        nonzero = np.nonzero(np.abs(diag) > 1e-12 * (1.0 + frobenius_norm(reduced_stack[0])))[0]
        if nonzero.size and diag[nonzero[0]] < 0.0:
            q = q.copy()
            q[0] *= -1.0
            reduced_stack = reduced_stack.copy()
            reduced_stack[0] *= -1.0

    reduced = SymmetricTuple.from_matrices(list(reduced_stack))
    form = CanonicalForm(reduced=reduced, p=p, q=q, degenerate=degenerate)
    _verify_canonical(t, form)
    return form


def _verify_canonical(original: SymmetricTuple, form: CanonicalForm) -> None:
    """Postcondition audit; raises NumericalFailure if the reduction is unsound."""
    red = form.reduced
    a1 = red.matrices[0]
    off_mass = frobenius_norm(a1 - np.diag(np.diag(a1)))
    if off_mass > 1e-10 * (1.0 + frobenius_norm(a1)):
        raise NumericalFailure(f"reduced A_1 not diagonal (off mass {off_mass:.3e})")
    norms = np.sqrt(red.norms_sq())
    for r in range(red.m):
        for s in range(r + 1, red.m):
            inner = frobenius_inner(red.matrices[r], red.matrices[s])
            if abs(inner) > 1e-10 * (1.0 + norms[r] * norms[s]):
                raise NumericalFailure(f"members {r + 1},{s + 1} not orthogonal ({inner:.3e})")
        if r + 1 < red.m and norms[r] < norms[r + 1] - 1e-12 * (1.0 + norms[r + 1]):
            raise NumericalFailure("member norms not sorted nonincreasing")
    replay = group_act(original, form.p, form.q)
    for r in range(red.m):
        err = frobenius_norm(replay.matrices[r] - red.matrices[r])
        if err > 1e-9 * (1.0 + norms[r]):
            raise NumericalFailure(f"(p, q) does not reproduce reduced member {r + 1}")


def lemma1_slack(eta, r) -> SlackReport:
    """Weighted eigenvalue-gap bound.

    For eta with zero sum and unit square sum and nonnegative weights
    r_ij (i < j):  sum_{i<j} (eta_i - eta_j)^2 r_ij <= sum r_ij + max r_ij.
    Only the strict upper triangle of `r` is read.
    """
    ev = np.asarray(eta, dtype=float)
    if ev.ndim != 1 or ev.size < 2:
        raise InputRejected("eta must be a vector of length >= 2")
    if not np.all(np.isfinite(ev)):
        raise InputRejected("eta entries must be finite")
    if abs(float(np.sum(ev))) > 1e-10:
        raise InputRejected(f"sum(eta) = {np.sum(ev):.3e}, must vanish within 1e-10")
    if abs(float(np.sum(ev * ev)) - 1.0) > 1e-10:
        raise InputRejected(f"sum(eta^2) = {np.sum(ev * ev):.6e}, must be 1 within 1e-10")
    n = ev.size
    rm = as_matrix(r, "r")
    if rm.shape[0] != n:
        raise InputRejected(f"weights must be {n}x{n} to match eta")
    iu, ju = np.triu_indices(n, k=1)
    weights = rm[iu, ju]
    if np.any(weights < 0.0):
        raise InputRejected("weights r_ij must be nonnegative")
    gaps = (ev[iu] - ev[ju]) ** 2
    lhs = float(np.sum(gaps * weights))
    rhs = float(np.sum(weights) + np.max(weights))
    return SlackReport("weighted-gap", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=default_tol(lhs))


def p_matrix_bound(s) -> SlackReport:
    """Largest eigenvalue of the arrowhead matrix behind the gap bound.

    P has corner sum(s), diagonal s_j, and -s_j on the first row/column;
    its top eigenvalue is at most sum(s) + max(s).
    """
    sv = np.asarray(s, dtype=float)
    if sv.ndim != 1 or sv.size < 1:
        raise InputRejected("s must be a nonempty vector")
    if not np.all(np.isfinite(sv)):
        raise InputRejected("s entries must be finite")
    if np.any(sv < 0.0):
        raise InputRejected("s entries must be nonnegative")
    k = sv.size
    p = np.zeros((k + 1, k + 1))
    p[0, 0] = np.sum(sv)
    p[np.arange(1, k + 1), np.arange(1, k + 1)] = sv
    p[0, 1:] = -sv
    p[1:, 0] = -sv
    lhs = float(sym_eigen(p).values[0])
    rhs = float(np.sum(sv) + np.max(sv))
    return SlackReport("arrowhead-bound", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=default_tol(lhs))


def key_lemma_slack(t: SymmetricTuple) -> SlackReport:
    """Refined commutator-sum bound for a canonical tuple.

    With A_1 diagonal of unit norm and A_2..A_m pairwise orthogonal with
    nonincreasing norms:
    sum_{a>=2} ||[A_1, A_a]||^2 <= sum_{a>=2} ||A_a||^2 + ||A_2||^2.
    """
    a1 = t.matrices[0]
    off_mass = frobenius_norm(a1 - np.diag(np.diag(a1)))
    if off_mass > 1e-10 * (1.0 + frobenius_norm(a1)):
        raise InputRejected(f"precondition failed: A_1 not diagonal (off mass {off_mass:.3e})")
    if abs(frobenius_norm(a1) - 1.0) > 1e-10:
        raise InputRejected(f"precondition failed: ||A_1|| = {frobenius_norm(a1):.12f}, need 1")
    norms = np.sqrt(t.norms_sq())
    for r in range(t.m):
        for s in range(r + 1, t.m):
            inner = frobenius_inner(t.matrices[r], t.matrices[s])
            if abs(inner) > 1e-10 * (1.0 + norms[r] * norms[s]):
                raise InputRejected(
                    f"precondition failed: members {r + 1},{s + 1} not orthogonal "
                    f"(<A,B> = {inner:.3e})"
                )
    for r in range(1, t.m - 1):
        if norms[r] < norms[r + 1] - 1e-12 * (1.0 + norms[r + 1]):
            raise InputRejected(
                f"precondition failed: norms of A_2..A_m not nonincreasing at position {r + 1}"
            )
    lhs = sum(norm_sq(commutator(a1, t.matrices[a])) for a in range(1, t.m))
    tail = float(np.sum(t.norms_sq()[1:]))
    rhs = tail + (norm_sq(t.matrices[1]) if t.m >= 2 else 0.0)
    return SlackReport("commutator-sum-bound", lhs=lhs, rhs=rhs, slack=rhs - lhs,
                       tol=default_tol(lhs))


def sharp_pair_bound(a, b) -> SlackReport:
    """Entrywise-sharp pair estimate ||[A, B]||^2 <= ||B||^2 + 2 max(b_ij)^2
    for diagonal unit-norm A and symmetric B."""
    am = as_matrix(a, "a")
    bm = as_matrix(b, "b")
    require_symmetric(bm, "b")
    if am.shape != bm.shape:
        raise InputRejected(f"dimension mismatch: {am.shape} vs {bm.shape}")
    off_mass = frobenius_norm(am - np.diag(np.diag(am)))
    if off_mass > 1e-10 * (1.0 + frobenius_norm(am)):
        raise InputRejected("a must be diagonal")
    if abs(frobenius_norm(am) - 1.0) > 1e-10:
        raise InputRejected(f"||a|| = {frobenius_norm(am):.12f}, need 1 within 1e-10")
    lhs = norm_sq(commutator(am, bm))
    rhs = norm_sq(bm) + 2.0 * float(np.max(np.abs(bm))) ** 2
    return SlackReport("sharp-pair-bound", lhs=lhs, rhs=rhs, slack=rhs - lhs,
                       tol=default_tol(lhs))


def extremal_case_a(n: int, c: float) -> SymmetricTuple:
    """Two-member equality configuration: the 2x2 Pauli-like pair embedded
    in n x n, second member scaled by `c`.  Gives DDVV equality at c^2 = 1
    and commutator-sum-bound equality for every c."""
    if n < 2:
        raise InputRejected("n must be >= 2")
    s = 1.0 / np.sqrt(2.0)
    a1 = np.zeros((n, n))
    a1[0, 0] = s
    a1[1, 1] = -s
    a2 = np.zeros((n, n))
    a2[0, 1] = a2[1, 0] = float(c) * s
    return SymmetricTuple.from_matrices([a1, a2])


def extremal_case_b(n: int, mu: float) -> SymmetricTuple:
    """n-member equality configuration of the commutator-sum bound:
    spike-diagonal leading member, first-row symmetric pairs scaled by `mu`."""
    if n < 2:
        raise InputRejected("n must be >= 2")
    lam = 1.0 / np.sqrt(n * (n - 1.0))
    a1 = np.diag(np.full(n, -lam))
    a1[0, 0] = lam * (n - 1.0)
    members = [a1]
    for alpha in range(1, n):
        m = np.zeros((n, n))
        m[0, alpha] = m[alpha, 0] = float(mu)
        members.append(m)
    return SymmetricTuple.from_matrices(members)


def sigma_matrix(t: SymmetricTuple) -> np.ndarray:
    """Pairwise squared commutator norms sigma_ij = ||[A_i, A_j]||^2 for a
    tuple of unit-norm members."""
    norms = np.sqrt(t.norms_sq())
    bad = np.nonzero(np.abs(norms - 1.0) > 1e-10)[0]
    if bad.size:
        raise InputRejected(
            f"member {bad[0] + 1} has norm {norms[bad[0]]:.12f}, all members must be unit norm"
        )
    sigma = np.zeros((t.m, t.m))
    for i in range(t.m):
        for j in range(i + 1, t.m):
            sigma[i, j] = sigma[j, i] = norm_sq(commutator(t.matrices[i], t.matrices[j]))
    return sigma


def lili_slack(sigma, x) -> SlackReport:
    """Li-Li inequality: sum sigma_ij x_i x_j <= 3/2 (sum x_i)^2 - sum x_i^2
    for nonnegative x."""
    sm = as_matrix(sigma, "sigma")
    require_symmetric(sm, "sigma")
    xv = np.asarray(x, dtype=float)
    if xv.ndim != 1 or xv.size != sm.shape[0]:
        raise InputRejected(f"x must be a vector of length {sm.shape[0]}")
    if not np.all(np.isfinite(xv)):
        raise InputRejected("x entries must be finite")
    if np.any(xv < 0.0):
        raise InputRejected("x entries must be nonnegative")
    lhs = float(xv @ sm @ xv)
    total = float(np.sum(xv))
    rhs = 1.5 * total * total - float(np.sum(xv * xv))
    return SlackReport("li-li", lhs=lhs, rhs=rhs, slack=rhs - lhs, tol=default_tol(lhs))
