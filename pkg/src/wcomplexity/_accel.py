"""Numba shim.

Set ``WCOMPLEXITY_NO_NUMBA=1`` to force the pure-numpy kernels, e.g. to
rule out JIT issues or to benchmark both paths.  When numba is missing the
pure path is used automatically.
"""

import os

DISABLED = os.environ.get("WCOMPLEXITY_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError("numba disabled by WCOMPLEXITY_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kw):
        if len(args) == 1 and callable(args[0]) and not kw:
            return args[0]
        return lambda f: f


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
