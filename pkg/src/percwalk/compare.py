"""Cross-engine comparison of the coined walk and its continuous-time simulation."""

from dataclasses import dataclass, field

import numpy as np

from . import tolerances as tol
from .coined import dtqw_run
from .coins import Grover
from .ctqw import ctqw_run, ctqw_run_regular_grover, hamiltonian_pair, regular_degree
from .errors import NotRegularError

__all__ = ["EngineComparison", "compare_trajectories", "compare_engines", "regular_grover_applicable"]


@dataclass
class EngineComparison:
    engine: str
    max_state_distance: float
    max_tv_distance: float
    state_distances: np.ndarray = field(repr=False)
    threshold: float
    first_failure: int | None

    @property
    def passed(self):
        return self.first_failure is None

    def as_dict(self):
        return {
            "engine": self.engine,
            "max_state_distance": self.max_state_distance,
            "max_tv_distance": self.max_tv_distance,
            "threshold": self.threshold,
            "verdict": "PASS" if self.passed else "FAIL",
            "first_failing_step": self.first_failure,
        }


def compare_trajectories(reference, other, engine, threshold=None):
    threshold = tol.EQUIVALENCE if threshold is None else threshold
    dist = np.linalg.norm(reference.states - other.states, axis=1)
    tv = 0.5 * np.abs(reference.vertex_probs - other.vertex_probs).sum(axis=1)
    bad = np.flatnonzero((dist > threshold) | (tv > threshold))
    return EngineComparison(
        engine,
        float(dist.max()),
        float(tv.max()),
        dist,
        threshold,
        int(bad[0]) if bad.size else None,
    )


def regular_grover_applicable(x, coins):
    try:
        regular_degree(x.source)
    except NotRegularError:
        return False
    return all(isinstance(c, Grover) for c in coins.values())


def compare_engines(x, coins, psi0, steps, engines=("ctqw",), hamiltonians=None, threshold=None):
    """Run the coined walk and each continuous-time engine, comparing step by step.

    ``hamiltonians`` overrides the weighted engine's Hamiltonians, which lets
    callers inject a perturbation as a negative control.
    """
    reference = dtqw_run(x, coins, psi0, steps)
    results = []
    for engine in engines:
        if engine == "ctqw":
            pair = hamiltonians if hamiltonians is not None else hamiltonian_pair(x, coins)
            traj = ctqw_run(x, coins, psi0, steps, hamiltonians=pair)
        elif engine == "ctqw-regular":
            traj = ctqw_run_regular_grover(x, psi0, steps, coins=coins)
        else:
            raise ValueError(f"unknown engine {engine!r}")
        results.append(compare_trajectories(reference, traj, engine, threshold))
    return results
