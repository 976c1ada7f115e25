"""Numerical tolerances used throughout the package.

Values can be overridden for experimentation through the
``PERCWALK_TOLERANCES`` environment variable, e.g.
``PERCWALK_TOLERANCES="HERMITIAN=1e-10,EQUIVALENCE=1e-8"``. Overrides are
read once at import time.
"""

import os

#: max |M - M^dagger| accepted as Hermitian
HERMITIAN = 1e-12
#: max |M^dagger M - I| accepted as unitary
UNITARY = 1e-10
#: max |R^2 - I| accepted as an involution
INVOLUTION = 1e-10
#: state norm deviation accepted on input
STATE_NORM = 1e-10
#: state norm deviation accepted when loading an instance file
SPEC_STATE_NORM = 1e-8
#: pairwise inner-product deviation accepted for coin alphas
ORTHONORMAL = 1e-10
#: eigenvalue deviation from +-1 accepted for a coin to count as a reflection
REFLECTION_SPECTRUM = 1e-10
#: Jacobi stops once the off-diagonal Frobenius norm falls below this times ||H||_F
JACOBI_RELATIVE = 1e-14
JACOBI_MAX_SWEEPS = 100
#: Gram-Schmidt candidates with a smaller residual norm are skipped
GRAM_SCHMIDT_RESIDUAL = 1e-8
#: cross-engine verdict threshold
EQUIVALENCE = 1e-9

_ENV = "PERCWALK_TOLERANCES"


def _apply_overrides(text):
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, _, value = item.partition("=")
        name = name.strip().upper()
        if name not in globals() or name.startswith("_"):
            raise ValueError(f"{_ENV}: unknown tolerance {name!r}")
        cast = int if name == "JACOBI_MAX_SWEEPS" else float
        globals()[name] = cast(value)


def as_dict():
    return {k: v for k, v in globals().items() if k.isupper() and not k.startswith("_")}


if os.environ.get(_ENV):
    _apply_overrides(os.environ[_ENV])
