import numpy as np
import pytest
from numpy.testing import assert_allclose

from ineqlab.curvature import (
    SecondFundamentalForm,
    clifford_model,
    curvature_report,
    fundamental_report,
    mean_curvature_sq,
    traceless,
    veronese_immersion,
    veronese_tuple,
)
from ineqlab.ddvv import ddvv_slack, group_act
from ineqlab.errors import InputRejected
from ineqlab.seeded import RandomStream, sub_seed


def random_form(stream, n, m, c):
    h = np.stack([stream.symmetric_matrix(n) for _ in range(m)])
    return SecondFundamentalForm.from_array(h, c=c)


class TestMeanCurvature:
    def test_zero(self):
        form = SecondFundamentalForm.from_array(np.zeros((2, 3, 3)), c=1.0)
        assert mean_curvature_sq(form) == 0.0

    def test_umbilic(self):
        h = np.zeros((2, 4, 4))
        h[0] = 1.7 * np.eye(4)
        form = SecondFundamentalForm.from_array(h, c=0.0)
        assert mean_curvature_sq(form) == pytest.approx(1.7 ** 2, rel=1e-15)

    def test_models_are_minimal(self):
        assert mean_curvature_sq(clifford_model(1, 2)) == pytest.approx(0.0, abs=1e-28)
        assert mean_curvature_sq(clifford_model(2, 5)) == pytest.approx(0.0, abs=1e-28)
        assert mean_curvature_sq(veronese_tuple()) == pytest.approx(0.0, abs=1e-28)


class TestTraceless:
    def test_umbilic_killed(self):
        h = np.zeros((1, 3, 3))
        h[0] = -2.0 * np.eye(3)
        out = traceless(SecondFundamentalForm.from_array(h, c=1.0))
        assert np.max(np.abs(out.h)) == 0.0

    def test_already_traceless_unchanged(self):
        form = clifford_model(2, 4)
        assert_allclose(traceless(form).h, form.h, atol=0.0)

    def test_removes_mean_curvature(self):
        form = random_form(RandomStream(501), 4, 3, 1.0)
        assert mean_curvature_sq(traceless(form)) <= 1e-28


class TestCurvatureReport:
    @pytest.mark.parametrize("c", [-1.0, 0.0, 1.0])
    def test_totally_geodesic(self, c):
        form = SecondFundamentalForm.from_array(np.zeros((2, 3, 3)), c=c)
        rep = curvature_report(form)
        assert rep.rho == c
        assert rep.rho_perp == 0.0
        assert abs(rep.geometric_slack) <= 1e-12
        assert abs(rep.shape_slack) <= 1e-12

    def test_umbilic_equality(self):
        h = np.zeros((1, 3, 3))
        h[0] = 0.8 * np.eye(3)
        rep = curvature_report(SecondFundamentalForm.from_array(h, c=1.0))
        assert rep.rho == pytest.approx(1.0 + 0.64, rel=1e-14)
        assert abs(rep.geometric_slack) <= 1e-12

    def test_veronese_values(self):
        rep = curvature_report(veronese_tuple())
        assert rep.rho == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert rep.rho_perp == pytest.approx(2.0 / 3.0, abs=1e-12)
        assert rep.mean_curv_sq == 0.0
        assert abs(rep.geometric_slack) <= 1e-10

    def test_random_both_slacks(self):
        for k in range(2000):
            stream = RandomStream(sub_seed(511, k))
            n, m = 2 + k % 5, 1 + k % 6
            c = (-1.0, 0.0, 1.0)[k % 3]
            rep = curvature_report(random_form(stream, n, m, c))
            tol = 1e-9 * (1.0 + abs(rep.mean_curv_sq) + abs(c))
            assert rep.geometric_slack >= -tol
            assert rep.shape_slack >= -tol * (n * n * (n - 1))

    def test_slack_ratio_regression(self):
        # numerically pinned: shape slack / geometric slack = n^2 (n - 1)
        for k in range(300):
            stream = RandomStream(sub_seed(521, k))
            n, m = 2 + k % 5, 2 + k % 4
            rep = curvature_report(random_form(stream, n, m, 1.0))
            if abs(rep.geometric_slack) < 1e-9:
                continue
            ratio = rep.shape_slack / rep.geometric_slack
            assert ratio == pytest.approx(n * n * (n - 1.0), rel=1e-9)

    def test_rho_perp_trace_shift_invariant(self):
        for k in range(300):
            stream = RandomStream(sub_seed(531, k))
            form = random_form(stream, 3 + k % 3, 2 + k % 3, 1.0)
            a = curvature_report(form).rho_perp
            b = curvature_report(traceless(form)).rho_perp
            assert abs(a - b) <= 1e-10 * (1.0 + a)

    def test_rejects_n1(self):
        with pytest.raises(InputRejected, match="n < 2"):
            curvature_report(SecondFundamentalForm.from_array(np.zeros((1, 1, 1)), c=1.0))


class TestFundamentalReport:
    def test_zero(self):
        rep = fundamental_report(SecondFundamentalForm.from_array(np.zeros((2, 3, 3)), c=1.0))
        assert rep.sigma_sq == 0.0
        assert rep.pinch == 0.0

    @pytest.mark.parametrize("r,n", [(1, 2), (2, 4), (1, 3), (3, 5), (2, 5)])
    def test_clifford_boundary(self, r, n):
        form = clifford_model(r, n)
        rep = fundamental_report(form)
        assert abs(rep.sigma_sq - n) <= 1e-12
        assert abs(rep.pinch - n) <= 1e-12
        assert rep.eigenvalues.size == 1

    def test_veronese_boundary(self):
        rep = fundamental_report(veronese_tuple())
        assert_allclose(rep.s, np.diag([2.0 / 3.0, 2.0 / 3.0]), atol=1e-15)
        assert rep.sigma_sq == 4.0 / 3.0
        assert abs(rep.pinch - 2.0) <= 1e-12

    def test_second_eigenvalue_bound_and_psd(self):
        for k in range(500):
            stream = RandomStream(sub_seed(541, k))
            rep = fundamental_report(random_form(stream, 2 + k % 5, 1 + k % 6, 1.0))
            assert rep.eigenvalues[-1] >= -1e-10 * (1.0 + rep.sigma_sq)
            lam2 = rep.eigenvalues[1] if rep.eigenvalues.size >= 2 else 0.0
            assert lam2 <= 0.5 * rep.sigma_sq + 1e-9 * (1.0 + rep.sigma_sq)
            assert rep.sigma_sq == pytest.approx(float(np.sum(rep.eigenvalues)), rel=1e-10)


class TestCliffordModel:
    def test_smallest(self):
        form = clifford_model(1, 2)
        assert_allclose(form.h[0], np.diag([1.0, -1.0]), atol=0.0)

    def test_balanced_four(self):
        form = clifford_model(2, 4)
        assert_allclose(form.h[0], np.diag([1.0, 1.0, -1.0, -1.0]), atol=0.0)

    def test_trace_free(self):
        for r, n in [(1, 5), (2, 7), (4, 6)]:
            assert abs(np.trace(clifford_model(r, n).h[0])) <= 1e-12

    def test_rejects_bad_split(self):
        with pytest.raises(InputRejected):
            clifford_model(0, 3)
        with pytest.raises(InputRejected):
            clifford_model(3, 3)


class TestVeroneseImmersion:
    def test_pole(self):
        u = veronese_immersion([np.sqrt(3.0), 0.0, 0.0])
        assert_allclose(u, [0.0, 0.0, 0.0, np.sqrt(3.0) / 2.0, 0.5], atol=1e-15)
        assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-12)

    def test_diagonal_point(self):
        u = veronese_immersion([1.0, 1.0, 1.0])
        s3 = 1.0 / np.sqrt(3.0)
        assert_allclose(u, [s3, s3, s3, 0.0, 0.0], atol=1e-15)

    def test_unit_image_and_antipodal(self):
        for k in range(2000):
            stream = RandomStream(sub_seed(551, k))
            v = stream.normals(3)
            if np.linalg.norm(v) < 1e-6:
                continue
            p = v / np.linalg.norm(v) * np.sqrt(3.0)
            u = veronese_immersion(p)
            assert abs(np.linalg.norm(u) - 1.0) <= 1e-10
            np.testing.assert_array_equal(u, veronese_immersion(-p))

    def test_rejects_off_sphere(self):
        with pytest.raises(InputRejected, match="sphere"):
            veronese_immersion([1.0, 0.0, 0.0])


class TestFrameInvariance:
    def test_curvature_outputs_invariant(self):
        for k in range(200):
            stream = RandomStream(sub_seed(561, k))
            n, m = 2 + k % 4, 2 + k % 3
            c = (-1.0, 0.0, 1.0)[k % 3]
            form = random_form(stream, n, m, c)
            p = stream.orthogonal_matrix(n)
            q = stream.orthogonal_matrix(m)
            acted = group_act(form.to_tuple(), p, q)
            acted_form = SecondFundamentalForm.from_array(np.stack(acted.matrices), c=c)
            a, b = curvature_report(form), curvature_report(acted_form)
            for field in ("rho", "rho_perp", "mean_curv_sq", "geometric_slack", "shape_slack"):
                va, vb = getattr(a, field), getattr(b, field)
                assert vb == pytest.approx(va, rel=1e-9, abs=1e-9)

    def test_veronese_tuple_ddvv_equality(self):
        rep = ddvv_slack(veronese_tuple().to_tuple())
        assert abs(rep.slack) <= 1e-12
