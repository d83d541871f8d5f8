"""Backend selection for the hot series kernels.

Two interchangeable implementations exist in ``prabhakar._kernels``: a
numba ``@njit`` path and a pure-numpy path.  The active one is chosen at
import time from the ``PRABHAKAR_BACKEND`` environment variable:

    auto   (default) numba when importable, numpy otherwise
    numba  require numba, raise if missing
    numpy  force the pure-numpy path

``benchmarks/bench_backends.py`` times both paths side by side.
"""

from __future__ import annotations

import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via PRABHAKAR_BACKEND=numpy
    numba = None
    HAVE_NUMBA = False

_requested = os.environ.get("PRABHAKAR_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"PRABHAKAR_BACKEND must be auto, numba or numpy, got {_requested!r}"
    )
if _requested == "numba" and not HAVE_NUMBA:
    raise RuntimeError("PRABHAKAR_BACKEND=numba but numba is not importable")

USE_NUMBA = HAVE_NUMBA if _requested == "auto" else (_requested == "numba")


def backend() -> str:
    """Name of the active kernel backend, 'numba' or 'numpy'."""
    return "numba" if USE_NUMBA else "numpy"


def njit(func):
    """Apply numba.njit when the numba backend is available, else no-op."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func
