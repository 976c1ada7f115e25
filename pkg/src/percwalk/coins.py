"""Reflection coins ``2 sum_k |a_k><a_k| - I`` on a vertex's local coin space.

The local basis of a vertex is its incident edges in ascending id order.
"""

from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from . import tolerances as tol
from .errors import (
    DimensionMismatchError,
    MissingCoinError,
    NonOrthonormalAlphasError,
    NotReflectionCoinError,
)
from .linalg import as_matrix, hermitian_eig, max_norm

__all__ = [
    "Grover",
    "Search",
    "Hadamard2",
    "Hadamard4",
    "Reflection",
    "CoinSpec",
    "uniform_state",
    "coin_alphas",
    "coin_block",
    "coin_from_matrix",
    "complete_basis",
    "validate_assignment",
    "HADAMARD2_ALPHA",
    "HADAMARD4_ALPHAS",
]


@dataclass(frozen=True)
class Grover:
    name = "grover"


@dataclass(frozen=True)
class Search:
    name = "search"


@dataclass(frozen=True)
class Hadamard2:
    name = "hadamard2"


@dataclass(frozen=True)
class Hadamard4:
    name = "hadamard4"


@dataclass(frozen=True)
class Reflection:
    """Reflection about the span of ``alphas`` (each a length-``d`` vector)."""

    alphas: tuple = ()
    name = "reflection"

    def __post_init__(self):
        rows = tuple(tuple(complex(z) for z in np.ravel(a)) for a in self.alphas)
        object.__setattr__(self, "alphas", rows)

    @property
    def m(self):
        return len(self.alphas)


CoinSpec = Union[Grover, Search, Hadamard2, Hadamard4, Reflection]

_SQ2 = np.sqrt(2.0)
HADAMARD2_ALPHA = np.array([2 + _SQ2, _SQ2]) / (2 * np.sqrt(2 + _SQ2))
HADAMARD4_ALPHAS = np.array(
    [
        [0.0, 1 / np.sqrt(6), 1 / np.sqrt(6), -np.sqrt(2 / 3)],
        [np.sqrt(3) / 2, 1 / (2 * np.sqrt(3)), 1 / (2 * np.sqrt(3)), 1 / (2 * np.sqrt(3))],
    ]
)


def uniform_state(d):
    return np.full(d, 1 / np.sqrt(d), dtype=np.complex128)


def _reflect(alphas, d):
    alphas = np.asarray(alphas, dtype=np.complex128).reshape(-1, d)
    return 2 * alphas.T @ alphas.conj() - np.eye(d)


def _check_presets():
    h2 = np.array([[1, 1], [1, -1]]) / _SQ2
    if max_norm(_reflect(HADAMARD2_ALPHA, 2) - h2) > 1e-14:
        raise RuntimeError("Hadamard2 alpha does not reproduce the Hadamard matrix")
    if max_norm(_reflect(HADAMARD4_ALPHAS, 4) - np.kron(h2, h2)) > 1e-14:
        raise RuntimeError("Hadamard4 alphas do not reproduce H (x) H")


_check_presets()


def coin_alphas(spec: CoinSpec, d: int) -> np.ndarray:
    """The orthonormal ``(m, d)`` array whose rows span the +1 eigenspace."""
    if d < 1:
        raise DimensionMismatchError(f"coin space dimension must be >= 1, got {d}")
    if isinstance(spec, Grover):
        return uniform_state(d)[None, :]
    if isinstance(spec, Search):
        return np.zeros((0, d), dtype=np.complex128)
    if isinstance(spec, Hadamard2):
        if d != 2:
            raise DimensionMismatchError(f"hadamard2 needs degree 2, vertex has degree {d}")
        return HADAMARD2_ALPHA.astype(np.complex128)[None, :]
    if isinstance(spec, Hadamard4):
        if d != 4:
            raise DimensionMismatchError(f"hadamard4 needs degree 4, vertex has degree {d}")
        return HADAMARD4_ALPHAS.astype(np.complex128)
    if isinstance(spec, Reflection):
        if spec.m > d:
            raise DimensionMismatchError(f"{spec.m} alphas exceed coin dimension {d}")
        if any(len(a) != d for a in spec.alphas):
            raise DimensionMismatchError(f"reflection alphas must have length {d}")
        alphas = np.array(spec.alphas, dtype=np.complex128).reshape(spec.m, d)
        gram = alphas.conj() @ alphas.T
        dev = max_norm(gram - np.eye(spec.m))
        if dev > tol.ORTHONORMAL:
            raise NonOrthonormalAlphasError(f"alphas deviate from orthonormal by {dev:.3e}")
        return alphas
    raise TypeError(f"not a coin spec: {spec!r}")


def coin_block(spec: CoinSpec, d: int) -> np.ndarray:
    return _reflect(coin_alphas(spec, d), d)


def complete_basis(alphas, d):
    """Extend the orthonormal rows of ``alphas`` to a unitary whose first columns are the alphas.

    Gram-Schmidt over the standard basis vectors; candidates with a residual
    norm below ``tolerances.GRAM_SCHMIDT_RESIDUAL`` are skipped.
    """
    cols = [np.asarray(a, dtype=np.complex128) for a in np.asarray(alphas).reshape(-1, d)]
    for k in range(d):
        if len(cols) == d:
            break
        cand = np.zeros(d, dtype=np.complex128)
        cand[k] = 1.0
        for _ in range(2):  # reorthogonalise once for stability
            for c in cols:
                cand = cand - c * np.vdot(c, cand)
        nrm = np.linalg.norm(cand)
        if nrm < tol.GRAM_SCHMIDT_RESIDUAL:
            continue
        cols.append(cand / nrm)
    return np.column_stack(cols) if cols else np.zeros((d, 0), dtype=np.complex128)


def coin_from_matrix(matrix) -> Reflection:
    """Convert an explicit coin matrix into a :class:`Reflection`.

    Coins that are not reflections (non-Hermitian, or with an eigenvalue
    other than +1/-1) have no percolated continuous-time counterpart and
    raise :class:`NotReflectionCoinError`.
    """
    c = as_matrix(matrix)
    d = c.shape[0]
    if c.shape != (d, d):
        raise DimensionMismatchError(f"coin matrix must be square, got {c.shape}")
    if max_norm(c.conj().T @ c - np.eye(d)) > tol.UNITARY:
        raise NotReflectionCoinError("coin matrix is not unitary")
    if max_norm(c - c.conj().T) > tol.HERMITIAN:
        ev = np.linalg.eigvals(c)
        bad = ev[np.abs(ev.imag) > tol.REFLECTION_SPECTRUM]
        detail = f"; complex eigenvalue {bad[0]:.6g}" if bad.size else ""
        raise NotReflectionCoinError(
            f"coin is not a reflection (not Hermitian{detail}); only coins with spectrum in {{+1, -1}} are supported"
        )
    w, v = hermitian_eig(c)
    if np.any(np.minimum(np.abs(w - 1), np.abs(w + 1)) > tol.REFLECTION_SPECTRUM):
        raise NotReflectionCoinError(f"coin eigenvalues {w} are not all +1 or -1")
    plus = v[:, w > 0]
    return Reflection(tuple(plus.T))


def validate_assignment(degrees, coins: Mapping[int, CoinSpec]):
    """Check that every vertex has a coin valid for its degree."""
    for v, d in enumerate(degrees):
        if v not in coins:
            raise MissingCoinError(f"no coin assigned to vertex {v}")
        coin_alphas(coins[v], d)
