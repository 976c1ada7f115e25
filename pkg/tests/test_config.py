import os
import subprocess
import sys

import pytest

from percwalk import tolerances


def run_python(code, **env):
    full = dict(os.environ, **env)
    out = subprocess.run([sys.executable, "-c", code], env=full, capture_output=True, text=True)
    return out


@pytest.fixture
def restore_tolerances():
    saved = tolerances.as_dict()
    yield
    for name, value in saved.items():
        setattr(tolerances, name, value)


def test_overrides_apply(restore_tolerances):
    tolerances._apply_overrides("equivalence=1e-6, JACOBI_MAX_SWEEPS=7")
    assert tolerances.EQUIVALENCE == 1e-6
    assert tolerances.JACOBI_MAX_SWEEPS == 7
    assert isinstance(tolerances.JACOBI_MAX_SWEEPS, int)


def test_unknown_override_rejected(restore_tolerances):
    with pytest.raises(ValueError, match="unknown tolerance"):
        tolerances._apply_overrides("NOPE=1")
    with pytest.raises(ValueError):
        tolerances._apply_overrides("_ENV=1")


def test_overrides_from_environment():
    out = run_python("from percwalk import tolerances as t; print(t.UNITARY)", PERCWALK_TOLERANCES="UNITARY=1e-7")
    assert out.returncode == 0, out.stderr
    assert float(out.stdout) == 1e-7


def test_disable_numba_flag():
    code = "from percwalk.linalg import jacobi_kernel_name as k; print(k())"
    out = run_python(code, PERCWALK_DISABLE_NUMBA="1")
    assert out.stdout.strip() == "numpy"
    out = run_python(code, PERCWALK_DISABLE_NUMBA="0")
    expected = "numba" if run_python("import numba").returncode == 0 else "numpy"
    assert out.stdout.strip() == expected
