"""Percolated continuous-time walks on the expanded graph.

One period of the coined walk is reproduced by two continuous-time phases:
first only clique edges are switched on and the state evolves under the
coin-phase Hamiltonian, then only pair edges are on and the state evolves
under the Laplacian of the pair-edge subgraph. Both phases last pi/2 in
the general (weighted) construction.

The coin-phase Hamiltonian is assembled per vertex from the clique
Laplacian:

* Grover coin: ``(2/d) L(K_d)``;
* search coin: ``2 I``;
* one-term coin ``2|a><a| - I``: ``W (2/d) L(K_d) W^dagger`` for a unitary
  ``W`` with ``W|s> = |a>``;
* m-term coin: ``(2/d) Wt diag(0,...,0, d,...,d) Wt^dagger`` where the
  first ``m`` columns of ``Wt`` are the alphas.

For a d-regular graph with Grover coins everywhere, the coin phase may
instead use the plain clique Laplacian for time pi/d, so the Hamiltonian
is always the Laplacian of a percolation of the expanded graph.
"""

from dataclasses import dataclass
from math import pi

import numpy as np

from .coined import CTQW_PERIOD, WalkTrajectory, _distributions, check_initial_state
from .coins import (
    Grover,
    coin_alphas,
    complete_basis,
    uniform_state,
    validate_assignment,
)
from .errors import NotAllGroverError, NotRegularError
from .expansion import ExpandedGraph, coin_subgraph, shift_subgraph
from .graph import Graph, laplacian
from .linalg import expm_scaled

__all__ = [
    "HamiltonianPair",
    "complete_graph_laplacian",
    "householder_transform",
    "clique_operator",
    "coin_hamiltonian_block",
    "coin_hamiltonian",
    "shift_hamiltonian",
    "full_hamiltonian",
    "hamiltonian_pair",
    "regular_degree",
    "regular_grover_phases",
    "ctqw_run",
    "ctqw_run_regular_grover",
    "percolation_schedule",
    "WEIGHTED",
    "REGULAR_GROVER",
]

WEIGHTED = "weighted"
REGULAR_GROVER = "regular-grover"


@dataclass(frozen=True)
class HamiltonianPair:
    coin: np.ndarray
    shift: np.ndarray

    @property
    def dim(self):
        return self.coin.shape[0]

    @property
    def full(self):
        return self.coin + self.shift


def complete_graph_laplacian(n):
    return n * np.eye(n) - np.ones((n, n))


def householder_transform(alpha):
    """A unitary ``W`` with ``W|s> = |alpha>``, ``|s>`` the uniform state.

    ``alpha`` is phase-aligned so that ``<s|alpha>`` is real and
    non-negative, the reflection across the bisector of ``|s>`` and the
    aligned state is taken, and the phase is restored as a global factor.
    """
    alpha = np.asarray(alpha, dtype=np.complex128)
    d = alpha.shape[0]
    s = uniform_state(d)
    overlap = np.vdot(s, alpha)
    phase = overlap / abs(overlap) if abs(overlap) > 1e-15 else 1.0
    aligned = alpha / phase
    u = s - aligned
    nrm = np.linalg.norm(u)
    if nrm < 1e-15:
        return phase * np.eye(d, dtype=np.complex128)
    u /= nrm
    return phase * (np.eye(d) - 2 * np.outer(u, u.conj()))


def clique_operator(alpha, transform=None):
    """Unweighted ``L_alpha = W L(K_N) W^dagger`` with ``exp(-i pi/N L_alpha) = 2|alpha><alpha| - I``.

    ``transform`` builds ``W`` from ``alpha``; the result does not depend on
    which valid ``W`` is used.
    """
    alpha = np.asarray(alpha, dtype=np.complex128)
    w = (transform or householder_transform)(alpha)
    return w @ complete_graph_laplacian(alpha.shape[0]) @ w.conj().T


def coin_hamiltonian_block(spec, d, transform=None):
    """Coin-phase Hamiltonian block whose pi/2 propagator is the coin block."""
    if isinstance(spec, Grover):
        coin_alphas(spec, d)
        return (2 / d) * complete_graph_laplacian(d).astype(np.complex128)
    alphas = coin_alphas(spec, d)
    m = alphas.shape[0]
    if m == 0:
        return 2 * np.eye(d, dtype=np.complex128)
    if m == 1:
        return (2 / d) * clique_operator(alphas[0], transform)
    wt = complete_basis(alphas, d)
    diag = np.r_[np.zeros(m), np.full(d - m, float(d))]
    return (2 / d) * (wt * diag) @ wt.conj().T


def coin_hamiltonian(x: ExpandedGraph, coins, transform=None) -> np.ndarray:
    validate_assignment(x.degrees, coins)
    h = np.zeros((x.dim, x.dim), dtype=np.complex128)
    for v, d in enumerate(x.degrees):
        sl = x.gamma.block_slice(v)
        h[sl, sl] = coin_hamiltonian_block(coins[v], d, transform)
    return h


def shift_hamiltonian(x: ExpandedGraph) -> np.ndarray:
    return laplacian(shift_subgraph(x)).astype(np.complex128)


def full_hamiltonian(x: ExpandedGraph, coins) -> np.ndarray:
    return coin_hamiltonian(x, coins) + shift_hamiltonian(x)


def hamiltonian_pair(x: ExpandedGraph, coins) -> HamiltonianPair:
    return HamiltonianPair(coin_hamiltonian(x, coins), shift_hamiltonian(x))


def _evolve(x, psi0, steps, phases, record_phases):
    """Apply the phase propagators ``[(unitary, duration), ...]`` once per period."""
    psi0 = check_initial_state(x, psi0)
    if steps < 0:
        raise ValueError("steps must be non-negative")
    states = np.empty((steps + 1, x.dim), dtype=np.complex128)
    states[0] = psi = psi0
    samples = [(0.0, psi0.copy())] if record_phases else None
    t = 0.0
    for k in range(steps):
        for u, duration in phases:
            psi = u @ psi
            t += duration
            if record_phases:
                samples.append((t, psi.copy()))
        states[k + 1] = psi
    return WalkTrajectory(states, _distributions(x, states), CTQW_PERIOD, samples)


def ctqw_run(x: ExpandedGraph, coins, psi0, steps: int, record_phases=False, hamiltonians=None):
    """Percolated continuous-time simulation of the coined walk.

    Per period: evolve under the coin-phase Hamiltonian for pi/2 with pair
    edges switched off, then under the pair-edge Laplacian for pi/2 with
    clique edges switched off. ``hamiltonians`` may supply a precomputed (or
    deliberately altered) :class:`HamiltonianPair`.
    """
    pair = hamiltonians if hamiltonians is not None else hamiltonian_pair(x, coins)
    phases = [(expm_scaled(pair.coin, pi / 2), pi / 2), (expm_scaled(pair.shift, pi / 2), pi / 2)]
    return _evolve(x, psi0, steps, phases, record_phases)


def regular_degree(g: Graph):
    deg = g.degrees()
    if g.n_vertices == 0 or np.any(deg != deg[0]):
        raise NotRegularError(f"graph is not regular (degrees {sorted(set(deg.astype(int)))})")
    return int(deg[0])


def regular_grover_phases(x: ExpandedGraph):
    """The two (Hamiltonian, duration, active edge ids) phases of the regular-Grover mode."""
    d = regular_degree(x.source)
    return [
        (laplacian(coin_subgraph(x)), pi / d, x.clique_edges),
        (laplacian(shift_subgraph(x)), pi / 2, x.pair_edges),
    ]


def ctqw_run_regular_grover(x: ExpandedGraph, psi0, steps: int, coins=None, record_phases=False):
    """Graph-Laplacian-driven simulation for d-regular graphs with Grover coins.

    ``coins`` is optional; if given, every coin must be Grover.
    """
    if coins is not None and not all(isinstance(coins.get(v), Grover) for v in range(x.source.n_vertices)):
        raise NotAllGroverError("regular-Grover mode needs a Grover coin at every vertex")
    phases = [(expm_scaled(h, t), t) for h, t, _ in regular_grover_phases(x)]
    return _evolve(x, psi0, steps, phases, record_phases)


def percolation_schedule(x: ExpandedGraph, steps: int, mode=WEIGHTED):
    """Switch times and the edge set active from each time on.

    The final entry marks the end of the evolution with every edge off.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if mode == WEIGHTED:
        coin_time = pi / 2
    elif mode == REGULAR_GROVER:
        coin_time = pi / regular_degree(x.source)
    else:
        raise ValueError(f"unknown schedule mode {mode!r}")
    out = []
    t = 0.0
    for _ in range(steps):
        out.append((t, x.clique_edges))
        t += coin_time
        out.append((t, x.pair_edges))
        t += pi / 2
    out.append((t, frozenset()))
    return out
