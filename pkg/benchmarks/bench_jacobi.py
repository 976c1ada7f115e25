"""Time the numba Jacobi kernel against the numpy fallback.

    python3 benchmarks/bench_jacobi.py --sizes 8 16 32 64 --repeat 3

Both kernels run on identical random Hermitian matrices; the eigenvalues
are cross-checked so a fast but wrong kernel shows up immediately.
"""

import argparse
import time

import numpy as np

from percwalk import _accel, linalg
from percwalk import tolerances as tol


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def time_kernel(kernel, h, repeat):
    best, result = np.inf, None
    for _ in range(repeat):
        a = h.copy()
        v = np.eye(len(h), dtype=np.complex128)
        start = time.perf_counter()
        sweeps = kernel(a, v, tol.JACOBI_RELATIVE * np.linalg.norm(a), tol.JACOBI_MAX_SWEEPS)
        best = min(best, time.perf_counter() - start)
        result = (np.sort(a.diagonal().real), sweeps)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64, 128])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    kernels = {"numpy": linalg._jacobi_numpy}
    if _accel.HAVE_NUMBA:
        kernels["numba"] = linalg._jacobi_scalar
        # compile outside the timed region
        linalg._jacobi_scalar(np.eye(2, dtype=np.complex128), np.eye(2, dtype=np.complex128), 1e-14, 1)
    else:
        print("numba not installed; timing the numpy kernel only")

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>5} {'sweeps':>6} " + " ".join(f"{k + ' [ms]':>12}" for k in kernels) + f" {'speedup':>8} {'max |dw|':>10}")
    for n in args.sizes:
        h = random_hermitian(rng, n)
        h /= linalg.max_norm(h)
        timings, eigs = {}, {}
        for name, kernel in kernels.items():
            timings[name], (eigs[name], sweeps) = time_kernel(kernel, h, args.repeat)
        reference = np.linalg.eigvalsh(h)
        err = max(np.abs(w - reference).max() for w in eigs.values())
        speedup = timings["numpy"] / timings["numba"] if "numba" in timings else float("nan")
        cols = " ".join(f"{timings[k] * 1e3:12.3f}" for k in kernels)
        print(f"{n:5d} {sweeps:6d} {cols} {speedup:8.1f} {err:10.2e}")


if __name__ == "__main__":
    main()
