import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from percwalk import _accel, linalg
from percwalk.errors import DimensionMismatchError, NoConvergenceError, NotHermitianError, NotInvolutionError
from percwalk.linalg import (
    adjoint,
    apply,
    expm_scaled,
    hermitian_eig,
    matmul,
    max_norm,
    reflection_propagator_oracle,
)

from conftest import expm_taylor, random_hermitian, random_unitary

K4_LAPLACIAN = 4 * np.eye(4) - np.ones((4, 4))
K3_LAPLACIAN = 3 * np.eye(3) - np.ones((3, 3))
GROVER3 = np.full((3, 3), 2 / 3) - np.eye(3)


@pytest.fixture(params=["numba", "numpy"])
def kernel(request, monkeypatch):
    if request.param == "numba" and not _accel.HAVE_NUMBA:
        pytest.skip("numba not installed")
    monkeypatch.setattr(_accel, "USE_NUMBA", request.param == "numba")
    return request.param


def check_decomposition(h, w, v, tol=1e-10):
    assert np.all(np.diff(w) >= 0)
    assert max_norm(h @ v - v * w) <= tol * max(1.0, max_norm(h))
    assert max_norm(v.conj().T @ v - np.eye(len(w))) <= tol


class TestHermitianEig:
    def test_diagonal(self, kernel):
        w, v = hermitian_eig(np.diag([0.0, 3.0, 3.0]))
        np.testing.assert_array_equal(w, [0, 3, 3])
        np.testing.assert_array_equal(v, np.eye(3))

    def test_complete_graph_laplacian(self, kernel):
        w, v = hermitian_eig(K4_LAPLACIAN)
        np.testing.assert_allclose(w, [0, 4, 4, 4], atol=1e-12)
        check_decomposition(K4_LAPLACIAN, w, v)

    def test_two_by_two(self, kernel):
        # characteristic polynomial (1-x)^2 - 1 = x(x-2)
        w, v = hermitian_eig([[1, -1], [-1, 1]])
        np.testing.assert_allclose(w, [0, 2], atol=1e-15)
        np.testing.assert_allclose(np.abs(v), np.full((2, 2), 1 / np.sqrt(2)), atol=1e-15)

    def test_complex_entries(self, kernel):
        h = np.array([[2, 1j], [-1j, 2]])
        w, v = hermitian_eig(h)
        np.testing.assert_allclose(w, [1, 3], atol=1e-14)
        check_decomposition(h, w, v)

    @pytest.mark.parametrize("d", [1, 2, 3, 5, 8, 12, 16])
    def test_random_against_lapack(self, kernel, rng, d):
        h = random_hermitian(rng, d)
        w, v = hermitian_eig(h)
        check_decomposition(h, w, v)
        np.testing.assert_allclose(w, np.linalg.eigvalsh(h), atol=1e-12)
        assert max_norm((v * w) @ v.conj().T - h) <= 1e-9

    def test_degenerate_random_basis(self, kernel, rng):
        u = random_unitary(rng, 6)
        h = (u * np.array([0, 0, 2, 2, 2, 5.0])) @ u.conj().T
        w, v = hermitian_eig(h)
        np.testing.assert_allclose(w, [0, 0, 2, 2, 2, 5], atol=1e-12)
        check_decomposition(h, w, v)

    def test_empty(self):
        w, v = hermitian_eig(np.zeros((0, 0)))
        assert w.shape == (0,) and v.shape == (0, 0)

    def test_zero_matrix(self, kernel):
        w, v = hermitian_eig(np.zeros((3, 3)))
        np.testing.assert_array_equal(w, 0)
        np.testing.assert_array_equal(v, np.eye(3))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            hermitian_eig([[0, 1], [0, 0]])

    def test_symmetrises_roundoff(self, kernel):
        h = np.array([[1.0, 1 + 1e-14], [1.0, 1.0]])
        w, _ = hermitian_eig(h)
        np.testing.assert_allclose(w, [0, 2], atol=1e-13)

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatchError):
            hermitian_eig(np.zeros((2, 3)))

    def test_no_convergence(self, kernel, monkeypatch, rng):
        monkeypatch.setattr(linalg.tol, "JACOBI_MAX_SWEEPS", 1)
        with pytest.raises(NoConvergenceError):
            hermitian_eig(random_hermitian(rng, 8))

    def test_kernels_agree(self, rng):
        h = random_hermitian(rng, 10)
        results = []
        for kern in (linalg._jacobi_scalar, linalg._jacobi_numpy):
            a = h.copy()
            v = np.eye(10, dtype=complex)
            assert kern(a, v, 1e-14 * np.linalg.norm(h), 100) > 0
            results.append(np.sort(a.diagonal().real))
        np.testing.assert_allclose(results[0], results[1], atol=1e-12)


class TestExpmScaled:
    def test_zero_time(self, rng):
        np.testing.assert_allclose(expm_scaled(random_hermitian(rng, 5), 0.0), np.eye(5), atol=1e-14)

    def test_swap(self):
        # eigenvalues {0, 2}: phases {1, exp(-i pi)} -> the swap
        np.testing.assert_allclose(expm_scaled([[1, -1], [-1, 1]], np.pi / 2), [[0, 1], [1, 0]], atol=1e-15)

    def test_complete_graph_gives_grover(self):
        np.testing.assert_allclose(expm_scaled(K3_LAPLACIAN, np.pi / 3), GROVER3, atol=1e-14)

    def test_matches_taylor_oracle(self, rng):
        for d in (2, 4, 7):
            h = random_hermitian(rng, d)
            np.testing.assert_allclose(expm_scaled(h, 0.7), expm_taylor(h, 0.7), atol=1e-11)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 12), st.floats(0, 2 * np.pi), st.floats(0, 2 * np.pi), st.integers(0, 2**32 - 1))
    def test_unitary_and_group_law(self, d, t1, t2, seed):
        h = random_hermitian(np.random.default_rng(seed), d)
        u1, u2 = expm_scaled(h, t1), expm_scaled(h, t2)
        assert max_norm(u1.conj().T @ u1 - np.eye(d)) <= 1e-10
        assert max_norm(u1 @ u2 - expm_scaled(h, t1 + t2)) <= 1e-9

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 8), st.data())
    def test_reflection_identity(self, d, data):
        rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
        m = data.draw(st.integers(0, d))
        q = random_unitary(rng, d)[:, :m]
        r = 2 * q @ q.conj().T - np.eye(d)
        assert max_norm(expm_scaled(np.eye(d) - r, np.pi / 2) - reflection_propagator_oracle(r)) <= 1e-9

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 16), st.integers(0, 2**32 - 1))
    def test_reconstruction(self, d, seed):
        h = random_hermitian(np.random.default_rng(seed), d, scale=3.0)
        w, v = hermitian_eig(h)
        assert max_norm((v * w) @ v.conj().T - h) <= 1e-9


class TestReflectionOracle:
    def test_identity(self):
        np.testing.assert_array_equal(reflection_propagator_oracle(np.eye(2)), np.eye(2))

    def test_swap(self):
        x = np.array([[0, 1], [1, 0]])
        np.testing.assert_array_equal(reflection_propagator_oracle(x), x)

    def test_grover(self):
        s = np.full(3, 1 / np.sqrt(3))
        r = 2 * np.outer(s, s) - np.eye(3)
        out = reflection_propagator_oracle(r)
        np.testing.assert_allclose(np.diag(out), -1 / 3, atol=1e-15)
        np.testing.assert_allclose(out[~np.eye(3, dtype=bool)], 2 / 3, atol=1e-15)

    def test_rejects_non_involution(self):
        with pytest.raises(NotInvolutionError):
            reflection_propagator_oracle(np.diag([1.0, 2.0]))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            reflection_propagator_oracle([[0, 1j], [1j, 0]])


class TestPlumbing:
    def test_matmul_identity(self, rng):
        a = random_hermitian(rng, 3)
        np.testing.assert_array_equal(matmul(np.eye(3), a), a)

    def test_adjoint(self):
        np.testing.assert_array_equal(adjoint([[0, 1j], [0, 0]]), [[0, 0], [-1j, 0]])

    def test_apply(self):
        np.testing.assert_array_equal(apply([[0, 1], [1, 0]], [1, 0]), [0, 1])

    def test_apply_preserves_norm(self, rng):
        u = random_unitary(rng, 6)
        v = rng.normal(size=6) + 1j * rng.normal(size=6)
        assert abs(np.linalg.norm(apply(u, v)) - np.linalg.norm(v)) <= 1e-10

    def test_max_norm(self):
        assert max_norm([[1, -3j], [2, 0]]) == 3.0

    @pytest.mark.parametrize(
        "call",
        [
            lambda: matmul(np.eye(2), np.eye(3)),
            lambda: apply(np.eye(2), np.ones(3)),
            lambda: apply(np.eye(2), np.eye(2)),
        ],
    )
    def test_dimension_mismatch(self, call):
        with pytest.raises(DimensionMismatchError):
            call()


@pytest.mark.parametrize("scale", [5e-324, 1e-300, 1e-150, 1e150, 1e300])
def test_eig_extreme_magnitudes(kernel, rng, scale):
    with np.errstate(over="raise", invalid="raise", divide="raise"):
        w, v = hermitian_eig(np.array([[0.0, scale], [scale, 0.0]]))
        assert np.array_equal(w, [-scale, scale])
        assert max_norm(v.conj().T @ v - np.eye(2)) <= 1e-14
        h = random_hermitian(rng, 6)
        w, v = hermitian_eig(h * scale) if scale >= 1e-150 else hermitian_eig(h)
    assert np.all(np.isfinite(w))


def test_eig_drops_subnormal_couplings(kernel):
    h = np.array([[1.0, 1e-320j], [-1e-320j, 2.0]])
    with np.errstate(over="raise", invalid="raise", divide="raise"):
        w, v = hermitian_eig(h)
    assert np.array_equal(w, [1.0, 2.0])
    assert np.array_equal(v, np.eye(2))
