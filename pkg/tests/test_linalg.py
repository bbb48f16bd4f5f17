import numpy as np
import pytest
from conftest import eij, offdiag2
from numpy.testing import assert_allclose, assert_array_equal

from ineqlab.errors import InputRejected
from ineqlab.linalg import (
    commutator,
    frobenius_inner,
    svd,
    sym_eigen,
    vectorize_sym,
)
from ineqlab.seeded import RandomStream

S2 = 1.0 / np.sqrt(2.0)


class TestFrobeniusInner:
    def test_identity(self):
        assert frobenius_inner(np.eye(2), np.eye(2)) == 2.0

    def test_diagonal_vs_offdiagonal(self):
        assert frobenius_inner(np.diag([S2, -S2]), offdiag2(S2)) == 0.0

    def test_spike_diagonal_unit_norm(self):
        # n = 3 leading member of the second equality family: 6 lam^2 = 1
        lam = 1.0 / np.sqrt(6.0)
        a = lam * np.diag([2.0, -1.0, -1.0])
        assert abs(6.0 * lam * lam - 1.0) < 1e-15
        assert frobenius_inner(a, a) == pytest.approx(1.0, abs=1e-14)

    def test_symmetric_in_arguments(self):
        rng = RandomStream(1)
        a, b = rng.gaussian_matrix(4), rng.gaussian_matrix(4)
        assert frobenius_inner(a, b) == frobenius_inner(b, a)

    def test_dimension_mismatch(self):
        with pytest.raises(InputRejected, match="dimension mismatch"):
            frobenius_inner(np.eye(2), np.eye(3))

    def test_cauchy_schwarz(self):
        rng = RandomStream(7)
        for _ in range(500):
            a, b = rng.gaussian_matrix(5), rng.gaussian_matrix(5)
            lhs = frobenius_inner(a, b) ** 2
            rhs = frobenius_inner(a, a) * frobenius_inner(b, b)
            assert rhs - lhs >= -1e-12 * (1.0 + rhs)

    def test_rejects_nan(self):
        bad = np.array([[np.nan, 0.0], [0.0, 1.0]])
        with pytest.raises(InputRejected, match="finite"):
            frobenius_inner(bad, np.eye(2))


class TestCommutator:
    def test_identity_commutes(self):
        b = RandomStream(2).gaussian_matrix(3)
        assert_allclose(commutator(np.eye(3), b), np.zeros((3, 3)), atol=0.0)

    def test_two_by_two_pair(self):
        got = commutator(np.diag([S2, -S2]), offdiag2(S2))
        assert_allclose(got, [[0.0, 1.0], [-1.0, 0.0]], atol=1e-15)

    def test_basis_pair(self):
        got = commutator(eij(2, 0, 1), eij(2, 1, 0))
        assert_array_equal(got, np.diag([1.0, -1.0]))
        assert frobenius_inner(got, got) == 2.0

    def test_antisymmetry_exact(self):
        rng = RandomStream(3)
        for _ in range(50):
            a, b = rng.gaussian_matrix(4), rng.gaussian_matrix(4)
            assert_array_equal(commutator(a, b), -commutator(b, a))

    def test_trace_vanishes(self):
        rng = RandomStream(4)
        for _ in range(100):
            a, b = rng.gaussian_matrix(6), rng.gaussian_matrix(6)
            scale = np.linalg.norm(a) * np.linalg.norm(b)
            assert abs(np.trace(commutator(a, b))) <= 1e-12 * scale


class TestSymEigen:
    def test_already_diagonal(self):
        dec = sym_eigen(np.diag([3.0, 1.0, 2.0]))
        assert_allclose(dec.values, [3.0, 2.0, 1.0], atol=0.0)

    def test_exchange_matrix(self):
        dec = sym_eigen(offdiag2(1.0))
        assert_allclose(dec.values, [1.0, -1.0], atol=1e-15)
        for k, expect in enumerate([np.array([S2, S2]), np.array([S2, -S2])]):
            v = dec.vectors[:, k]
            assert min(np.max(np.abs(v - expect)), np.max(np.abs(v + expect))) < 1e-12

    def test_veronese_fundamental_matrix(self):
        from ineqlab.curvature import fundamental_report, veronese_tuple

        rep = fundamental_report(veronese_tuple())
        dec = sym_eigen(rep.s)
        assert_allclose(dec.values, [2.0 / 3.0, 2.0 / 3.0], atol=1e-14)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(InputRejected, match="not symmetric"):
            sym_eigen([[0.0, 1.0], [0.0, 0.0]])

    def test_roundtrip_campaign(self):
        # reconstruction within 1e-9 relative, orthogonality within 1e-10
        rng = RandomStream(5)
        for k in range(10_000):
            n = 2 + k % 11
            a = rng.symmetric_matrix(n)
            dec = sym_eigen(a)
            scale = 1.0 + np.linalg.norm(a)
            assert np.max(np.abs(dec.reconstruct() - a)) <= 1e-9 * scale
            assert np.max(np.abs(dec.vectors.T @ dec.vectors - np.eye(n))) <= 1e-10
            assert np.all(np.diff(dec.values) <= 0.0)


class TestSvd:
    def test_diagonal_negative(self):
        dec = svd(np.diag([2.0, -3.0]))
        assert_allclose(dec.lam, [3.0, 2.0], atol=0.0)

    def test_rank_one(self):
        dec = svd(eij(2, 0, 1))
        assert_allclose(dec.lam, [1.0, 0.0], atol=0.0)

    def test_orthogonal_input(self):
        q = RandomStream(6).orthogonal_matrix(5)
        assert_allclose(svd(q).lam, np.ones(5), atol=1e-12)

    def test_roundtrip_campaign(self):
        rng = RandomStream(8)
        for k in range(10_000):
            n = 2 + k % 11
            x = rng.gaussian_matrix(n)
            dec = svd(x)
            scale = 1.0 + np.linalg.norm(x)
            assert np.max(np.abs(dec.reconstruct() - x)) <= 1e-9 * scale
            assert np.all(dec.lam >= 0.0)
            assert np.all(np.diff(dec.lam) <= 0.0)
            # singular values are the square roots of the spectrum of X^T X
            gram_vals = np.sort(np.linalg.eigvalsh(x.T @ x))[::-1]
            assert_allclose(dec.lam ** 2, np.maximum(gram_vals, 0.0), atol=1e-9 * scale ** 2)


class TestVectorizeSym:
    def test_zero(self):
        assert_array_equal(vectorize_sym(np.zeros((3, 3))), np.zeros(6))

    def test_identity_two(self):
        assert_allclose(vectorize_sym(np.eye(2)), [0.0, S2, S2], atol=0.0)
        assert np.sum(vectorize_sym(np.eye(2)) ** 2) == pytest.approx(1.0, abs=1e-15)

    def test_offdiag_slot(self):
        v = vectorize_sym(offdiag2(S2))
        assert_allclose(v, [S2, 0.0, 0.0], atol=0.0)
        assert np.sum(v * v) == pytest.approx(0.5, abs=1e-15)

    def test_half_norm_property(self):
        rng = RandomStream(9)
        for _ in range(300):
            a = rng.symmetric_matrix(6)
            lhs = float(np.sum(vectorize_sym(a) ** 2))
            rhs = 0.5 * frobenius_inner(a, a)
            assert abs(lhs - rhs) <= 1e-12 * (1.0 + rhs)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(InputRejected, match="not symmetric"):
            vectorize_sym(eij(3, 0, 1))
