"""Optional numba acceleration.

Kernels decorated with :func:`njit` are compiled when numba is importable
and ``PERCWALK_DISABLE_NUMBA`` is unset (or ``0``). Otherwise callers fall
back to the vectorised numpy variants.
"""

import os

_disabled = os.environ.get("PERCWALK_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional extra
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _disabled


def njit(func):
    """Compile ``func`` in nopython mode if numba is present, else return it unchanged."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True)(func)
