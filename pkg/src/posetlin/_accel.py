"""Backend selection for the counting kernels.

Set ``POSETLIN_BACKEND=numpy`` to bypass numba and run the vectorised numpy
kernels instead. The choice is read once, at import time.
"""

import os

try:
    import numba
except ModuleNotFoundError:  # pragma: no cover - numba is a declared dependency
    numba = None

BACKEND_ENV = "POSETLIN_BACKEND"

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get(BACKEND_ENV, "numba").strip().lower() != "numpy"


def njit(f=None, **options):
    """``numba.njit`` when numba is importable, identity otherwise.

    Functions wrapped here are always compiled when numba exists, whatever the
    backend flag says, so the benchmark can compare both paths in one process.
    """
    options.setdefault("cache", True)
    if numba is None:
        if f is None:
            return lambda g: g
        return f
    if f is None:
        return lambda g: numba.njit(g, **options)
    return numba.njit(f, **options)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
