"""Flip-flop coined quantum walks and their exact simulation by percolated
continuous-time quantum walks on the expanded graph."""

from .coined import (
    WalkTrajectory,
    coin_operator,
    dtqw_propagator,
    dtqw_run,
    shift_operator,
    vertex_distribution,
)
from .coins import Grover, Hadamard2, Hadamard4, Reflection, Search, coin_block, coin_from_matrix
from .ctqw import (
    HamiltonianPair,
    coin_hamiltonian,
    ctqw_run,
    ctqw_run_regular_grover,
    full_hamiltonian,
    percolation_schedule,
    shift_hamiltonian,
)
from .errors import PercwalkError
from .expansion import ExpandedGraph, coin_subgraph, expand, gamma_basis, shift_subgraph
from .graph import Graph, adjacency, laplacian, percolate
from .linalg import expm_scaled, hermitian_eig, reflection_propagator_oracle

__version__ = "0.1.0"
