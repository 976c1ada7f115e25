"""Dense complex linear algebra.

Matrices are plain ``complex128`` numpy arrays; states are 1-d arrays. The
Hermitian eigensolver is a cyclic Jacobi method working directly on the
complex matrix: each rotation first removes the phase of the pivot entry
and then applies a real Givens rotation.
"""

from typing import NamedTuple

import numpy as np

from . import _accel
from . import tolerances as tol
from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotHermitianError,
    NotInvolutionError,
)

__all__ = [
    "EigenDecomposition",
    "as_matrix",
    "as_state",
    "hermitian_eig",
    "expm_scaled",
    "reflection_propagator_oracle",
    "matmul",
    "adjoint",
    "apply",
    "max_norm",
    "is_hermitian",
    "is_unitary",
    "jacobi_kernel_name",
]


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(a):
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got shape {m.shape}")
    return m


def as_state(v):
    s = np.asarray(v, dtype=np.complex128)
    if s.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-d state vector, got shape {s.shape}")
    return s


def _require_square(m):
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"matrix is not square: {m.shape}")


def max_norm(a):
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def adjoint(a):
    return as_matrix(a).conj().T


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def apply(a, v):
    a, v = as_matrix(a), as_state(v)
    if a.shape[1] != v.shape[0]:
        raise DimensionMismatchError(f"cannot apply {a.shape} matrix to state of dim {v.shape[0]}")
    return a @ v


def is_hermitian(a, atol=None):
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return max_norm(a - a.conj().T) <= (tol.HERMITIAN if atol is None else atol)


def is_unitary(a, atol=None):
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return max_norm(a.conj().T @ a - np.eye(a.shape[0])) <= (tol.UNITARY if atol is None else atol)


# -- Jacobi kernels -----------------------------------------------------------
#
# Both kernels diagonalise ``a`` in place and accumulate the rotations into
# ``v``. They return the number of sweeps used, or -1 if ``max_sweeps`` was
# exhausted. Input is pre-scaled so its largest entry is 1; off-diagonal
# entries below _NEGLIGIBLE are then dropped rather than rotated, which keeps
# the pivot phase and angle clear of subnormal arithmetic. The numba kernel
# loops over scalars; the numpy kernel updates whole rows and columns with
# slicing. The arithmetic is the same.


_NEGLIGIBLE = 1e-150


@_accel.njit
def _jacobi_scalar(a, v, threshold, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += 2.0 * (a[p, q].real ** 2 + a[p, q].imag ** 2)
        if np.sqrt(off) <= threshold:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < _NEGLIGIBLE:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # J = diag(1, conj(phase)) @ [[c, s], [-s, c]] on (p, q)
                jpp = c + 0j
                jpq = s + 0j
                jqp = -s * np.conj(phase)
                jqq = c * np.conj(phase)
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = akp * jpp + akq * jqp
                    a[k, q] = akp * jpq + akq * jqq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = np.conj(jpp) * apk + np.conj(jqp) * aqk
                    a[q, k] = np.conj(jpq) * apk + np.conj(jqq) * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp * jpp + vkq * jqp
                    v[k, q] = vkp * jpq + vkq * jqq
    return -1


def _jacobi_numpy(a, v, threshold, max_sweeps):
    n = a.shape[0]
    iu = np.triu_indices(n, 1)
    for sweep in range(max_sweeps + 1):
        if np.sqrt(2.0 * np.sum(np.abs(a[iu]) ** 2)) <= threshold:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < _NEGLIGIBLE:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                jqp = -s * np.conj(phase)
                jqq = c * np.conj(phase)
                colp, colq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = colp * c + colq * jqp
                a[:, q] = colp * s + colq * jqq
                rowp, rowq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rowp + np.conj(jqp) * rowq
                a[q, :] = s * rowp + np.conj(jqq) * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = vp * c + vq * jqp
                v[:, q] = vp * s + vq * jqq
    return -1


def jacobi_kernel_name():
    return "numba" if _accel.USE_NUMBA else "numpy"


def _jacobi(a, v, threshold, max_sweeps):
    if _accel.USE_NUMBA:
        return _jacobi_scalar(a, v, threshold, max_sweeps)
    return _jacobi_numpy(a, v, threshold, max_sweeps)


def hermitian_eig(h):
    """Eigendecomposition of a Hermitian matrix.

    Returns eigenvalues in ascending order with matching eigenvector
    columns. Input deviating from Hermitian by at most
    ``tolerances.HERMITIAN`` is symmetrised first; larger deviations raise
    :class:`NotHermitianError`.
    """
    h = as_matrix(h)
    _require_square(h)
    dev = max_norm(h - h.conj().T)
    if dev > tol.HERMITIAN:
        raise NotHermitianError(f"matrix deviates from Hermitian by {dev:.3e}")
    n = h.shape[0]
    a = np.ascontiguousarray(0.5 * (h + h.conj().T))
    v = np.eye(n, dtype=np.complex128)
    scale = max_norm(a)
    if n == 0 or scale == 0.0:
        return EigenDecomposition(np.zeros(n), v)
    a.view(np.float64)[...] /= scale  # real division; complex/real can overflow for subnormal scale
    threshold = tol.JACOBI_RELATIVE * np.linalg.norm(a)
    sweeps = _jacobi(a, v, threshold, tol.JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise NoConvergenceError(f"Jacobi did not converge in {tol.JACOBI_MAX_SWEEPS} sweeps")
    w = a.diagonal().real * scale
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order].copy(), v[:, order].copy())


def expm_scaled(h, theta):
    """Return ``exp(-1j * theta * h)`` for Hermitian ``h`` via its eigendecomposition."""
    w, v = hermitian_eig(h)
    return (v * np.exp(-1j * theta * w)) @ v.conj().T


def reflection_propagator_oracle(r):
    """Closed-form ``exp(-i pi/2 (I - R))`` for a Hermitian involution ``R``.

    Since ``(I - R)/2`` is the projector onto the -1 eigenspace, the
    exponential equals ``R`` exactly; no eigendecomposition is involved.
    """
    r = as_matrix(r)
    _require_square(r)
    dev = max_norm(r - r.conj().T)
    if dev > tol.HERMITIAN:
        raise NotHermitianError(f"matrix deviates from Hermitian by {dev:.3e}")
    dev = max_norm(r @ r - np.eye(r.shape[0]))
    if dev > tol.INVOLUTION:
        raise NotInvolutionError(f"R^2 deviates from I by {dev:.3e}")
    return r.copy()
