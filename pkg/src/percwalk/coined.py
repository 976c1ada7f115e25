"""Flip-flop coined quantum walk ``U = S C`` on the vertex-edge pair basis."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import tolerances as tol
from .coins import coin_block, validate_assignment
from .errors import DimensionMismatchError
from .expansion import ExpandedGraph
from .linalg import as_state

__all__ = [
    "WalkTrajectory",
    "DTQW_STEP",
    "CTQW_PERIOD",
    "shift_operator",
    "coin_operator",
    "dtqw_propagator",
    "dtqw_run",
    "vertex_distribution",
    "check_initial_state",
]

DTQW_STEP = "dtqw-step"
CTQW_PERIOD = "ctqw-period"


@dataclass
class WalkTrajectory:
    """States after each step (row ``t`` is the state at step ``t``)."""

    states: np.ndarray
    vertex_probs: np.ndarray
    step_semantics: str
    #: optional (time, state) samples at every phase boundary
    phase_states: Optional[list] = field(default=None, repr=False)

    @property
    def steps(self):
        return len(self.states) - 1

    def __len__(self):
        return len(self.states)


def shift_operator(x: ExpandedGraph) -> np.ndarray:
    """Permutation swapping the two members of every edge pair."""
    s = np.zeros((x.dim, x.dim), dtype=np.complex128)
    for a, b in x.gamma.edge_pairs:
        s[a, b] = s[b, a] = 1.0
    return s


def coin_operator(x: ExpandedGraph, coins) -> np.ndarray:
    """Block-diagonal direct sum of the per-vertex coin blocks."""
    validate_assignment(x.degrees, coins)
    c = np.zeros((x.dim, x.dim), dtype=np.complex128)
    for v, d in enumerate(x.degrees):
        sl = x.gamma.block_slice(v)
        c[sl, sl] = coin_block(coins[v], d)
    return c


def dtqw_propagator(x: ExpandedGraph, coins) -> np.ndarray:
    return shift_operator(x) @ coin_operator(x, coins)


def check_initial_state(x: ExpandedGraph, psi0):
    psi0 = as_state(psi0)
    if psi0.shape[0] != x.dim:
        raise DimensionMismatchError(f"initial state has dim {psi0.shape[0]}, expected {x.dim}")
    nrm = np.linalg.norm(psi0)
    if abs(nrm - 1) > tol.STATE_NORM:
        raise DimensionMismatchError(f"initial state is not normalised (norm {nrm:.12g})")
    return psi0


def vertex_distribution(x: ExpandedGraph, psi) -> np.ndarray:
    """Probability of finding the walker at each vertex of the original graph."""
    psi = as_state(psi)
    if psi.shape[-1] != x.dim:
        raise DimensionMismatchError(f"state has dim {psi.shape[-1]}, expected {x.dim}")
    return np.bincount(x.gamma.vertex_of(), weights=np.abs(psi) ** 2, minlength=x.source.n_vertices)


def _distributions(x, states):
    owner = x.gamma.vertex_of()
    probs = np.zeros((states.shape[0], x.source.n_vertices))
    np.add.at(probs, (slice(None), owner), np.abs(states) ** 2)
    return probs


def dtqw_run(x: ExpandedGraph, coins, psi0, steps: int) -> WalkTrajectory:
    psi0 = check_initial_state(x, psi0)
    if steps < 0:
        raise ValueError("steps must be non-negative")
    u = dtqw_propagator(x, coins)
    states = np.empty((steps + 1, x.dim), dtype=np.complex128)
    states[0] = psi0
    for t in range(steps):
        states[t + 1] = u @ states[t]
    return WalkTrajectory(states, _distributions(x, states), DTQW_STEP)
